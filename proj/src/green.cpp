#include "fusionlab/green.hpp"

#include "fusionlab/modp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace fusionlab {

int JordanType::multiplicity(int size) const {
  return static_cast<int>(std::count(blocks.begin(), blocks.end(), size));
}

int JordanType::total() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

namespace {

void check_args(int r, int s, int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (r < 1 || r > p || s < 1 || s > p) {
    throw InputError("block sizes must lie in [1, p]; got r=" + std::to_string(r) +
                     ", s=" + std::to_string(s) + ", p=" + std::to_string(p));
  }
}

// Jordan type of a nilpotent matrix from rank(A^m), m = 0, 1, ...
JordanType jordan_from_ranks(const ModpMatrix &a, int p) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> ranks{n};
  ModpMatrix power = a;
  while (true) {
    const std::size_t rk = rank(power);
    ranks.push_back(rk);
    if (rk == 0) break;
    if (ranks.size() > n + 1) throw InputError("matrix is not nilpotent");
    power = a * power;
  }
  ranks.push_back(0);
  JordanType jt{p, {}};
  for (std::size_t m = 1; m + 1 < ranks.size(); ++m) {
    const long count = static_cast<long>(ranks[m - 1]) - 2 * static_cast<long>(ranks[m]) +
                       static_cast<long>(ranks[m + 1]);
    for (long c = 0; c < count; ++c) jt.blocks.push_back(static_cast<int>(m));
  }
  return jt;
}

// Index of e_i ⊗ f_j is i*s + j; N maps e_{i+1} to e_i.
ModpMatrix tensor_operator(int r, int s, int p, bool unipotent) {
  const std::size_t n = static_cast<std::size_t>(r) * static_cast<std::size_t>(s);
  ModpMatrix a(n, n, static_cast<std::uint32_t>(p));
  auto idx = [s](int i, int j) { return static_cast<std::size_t>(i) * s + j; };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      if (i + 1 < r) a.set(idx(i, j), idx(i + 1, j), 1);
      if (j + 1 < s) a.set(idx(i, j), idx(i, j + 1), 1);
      if (unipotent && i + 1 < r && j + 1 < s) a.set(idx(i, j), idx(i + 1, j + 1), 1);
    }
  }
  return a;
}

} // namespace

JordanType unipotent_jordan_tensor(int r, int s, int p) {
  check_args(r, s, p);
  return jordan_from_ranks(tensor_operator(r, s, p, true), p);
}

JordanType nilpotent_jordan_tensor(int r, int s, int p) {
  check_args(r, s, p);
  return jordan_from_ranks(tensor_operator(r, s, p, false), p);
}

namespace {

GreenRing build_green_ring(int p) {
  const std::size_t n = static_cast<std::size_t>(p);
  RingData d;
  d.name = "Green" + std::to_string(p);
  for (int s = 1; s <= p; ++s) d.labels.push_back("L" + std::to_string(s));
  d.unit = 0;
  d.dual.resize(n);
  std::iota(d.dual.begin(), d.dual.end(), std::size_t{0});
  d.commutative = true;
  d.fusion = false;
  d.constants.assign(n * n * n, 0);
  for (int r = 1; r <= p; ++r) {
    for (int s = r; s <= p; ++s) {
      const JordanType jt = unipotent_jordan_tensor(r, s, p);
      for (int m : jt.blocks) {
        const std::size_t i = static_cast<std::size_t>(r - 1);
        const std::size_t j = static_cast<std::size_t>(s - 1);
        const std::size_t k = static_cast<std::size_t>(m - 1);
        d.constants[(i * n + j) * n + k] += 1;
        if (i != j) d.constants[(j * n + i) * n + k] += 1;
      }
    }
  }
  return GreenRing{BasedRing(std::move(d)), p};
}

} // namespace

GreenRing green_ring(int p, int bound) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (p > bound) {
    throw InputError("p = " + std::to_string(p) + " exceeds the Green ring bound " +
                     std::to_string(bound));
  }
  static std::mutex mutex;
  static std::map<int, GreenRing> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_green_ring(p)).first;
  return it->second;
}

} // namespace fusionlab
