#include "fusionlab/verlinde.hpp"

#include "fusionlab/modp.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace fusionlab {

namespace {

void require_prime(int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
}

void require_subscript(int s, int p) {
  if (s < 1 || s > p - 1) {
    throw InputError("subscript " + std::to_string(s) + " outside [1, " + std::to_string(p - 1) + "]");
  }
}

std::vector<int> svec_subscripts(int p) { return p > 2 ? std::vector<int>{1, p - 1} : std::vector<int>{}; }

std::vector<int> plus_subscripts(int p) {
  std::vector<int> out;
  if (p > 3) {
    for (int s = 1; s <= p - 2; s += 2) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> to_indices(const std::vector<int> &subscripts) {
  std::vector<std::size_t> out;
  for (int s : subscripts) out.push_back(static_cast<std::size_t>(s - 1));
  return out;
}

} // namespace

VerlindeRing verlinde_ring(int p) {
  require_prime(p);
  const std::size_t n = static_cast<std::size_t>(p - 1);
  RingData d;
  d.name = "Ver" + std::to_string(p);
  for (int s = 1; s < p; ++s) d.labels.push_back("L" + std::to_string(s));
  d.unit = 0;
  d.dual.resize(n);
  std::iota(d.dual.begin(), d.dual.end(), std::size_t{0});
  d.constants.assign(n * n * n, 0);
  for (int r = 1; r < p; ++r) {
    for (int s = 1; s < p; ++s) {
      const int c = std::min({r, s, p - r, p - s});
      for (int i = 1; i <= c; ++i) {
        const int t = std::abs(r - s) + 2 * i - 1;
        d.constants[((static_cast<std::size_t>(r - 1)) * n + static_cast<std::size_t>(s - 1)) * n +
                    static_cast<std::size_t>(t - 1)] += 1;
      }
    }
  }
  return VerlindeRing{BasedRing(std::move(d)), p, svec_subscripts(p), plus_subscripts(p)};
}

VerlindeRing quotient_green(const GreenRing &green) {
  require_valid(green.ring);
  const int p = green.p;
  const std::size_t m = static_cast<std::size_t>(p);
  if (green.ring.size() != m) throw InputError("Green ring has wrong basis size");
  const std::size_t n = m - 1;
  RingData d;
  d.name = "Ver" + std::to_string(p);
  d.labels.assign(green.ring.labels().begin(), green.ring.labels().end() - 1);
  d.unit = green.ring.unit();
  d.dual.assign(green.ring.duals().begin(), green.ring.duals().end() - 1);
  d.commutative = green.ring.commutative();
  d.fusion = true;
  d.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.constants[(i * n + j) * n + k] = green.ring.N(i, j, k);
  return VerlindeRing{BasedRing(std::move(d)), p, svec_subscripts(p), plus_subscripts(p)};
}

BasedRing svec_subring(int p) {
  require_prime(p);
  if (p <= 2) throw UndefinedForPrime("sVec subring of Ver_p needs p > 2");
  const auto ver = verlinde_ring(p);
  return restrict_to(ver.ring, to_indices(ver.svec), "sVec" + std::to_string(p));
}

BasedRing plus_subring(int p) {
  require_prime(p);
  if (p <= 3) throw UndefinedForPrime("Ver_p^+ is undefined for p <= 3");
  const auto ver = verlinde_ring(p);
  return restrict_to(ver.ring, to_indices(ver.plus), "Ver" + std::to_string(p) + "+");
}

std::pair<int, int> frobenius_on_verlinde(int s, int p) {
  require_prime(p);
  if (p <= 2) throw UndefinedForPrime("the Frobenius formula on Ver_p needs p > 2");
  require_subscript(s, p);
  return s % 2 == 1 ? std::pair{1, s} : std::pair{p - 1, p - s};
}

int parity_twist(int s, int p) {
  require_prime(p);
  require_subscript(s, p);
  return s % 2 == 1 ? 1 : p - 1;
}

} // namespace fusionlab
