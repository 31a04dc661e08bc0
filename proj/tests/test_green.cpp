#include <doctest.h>

#include "fusionlab/based_ring.hpp"
#include "fusionlab/green.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace fusionlab;

namespace {

// Independent oracle: dim ker(A^m) by enumerating all of F_p^n. Only for tiny n.
// A is J_r ⊗ J_s - I (unipotent) or N_r ⊗ I + I ⊗ N_s; returns block sizes.
std::vector<int> brute_force_jordan(int r, int s, int p, bool unipotent) {
  const int n = r * s;
  // a[row][col], applying N e_{i+1} = e_i on each factor.
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      if (i + 1 < r) a[i * s + j][(i + 1) * s + j] = 1;
      if (j + 1 < s) a[i * s + j][i * s + j + 1] = 1;
      if (unipotent && i + 1 < r && j + 1 < s) a[i * s + j][(i + 1) * s + j + 1] = 1;
    }
  auto apply = [&](const std::vector<int> &v) {
    std::vector<int> w(n, 0);
    for (int row = 0; row < n; ++row) {
      long acc = 0;
      for (int col = 0; col < n; ++col) acc += a[row][col] * v[col];
      w[row] = static_cast<int>(acc % p);
    }
    return w;
  };
  // kernel_size[m] = #{v : A^m v = 0}
  std::vector<long> kernel_size(n + 2, 0);
  std::vector<int> v(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(c % p);
      c /= p;
    }
    std::vector<int> w = v;
    int m = 0;
    while (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) {
      w = apply(w);
      ++m;
    }
    // v dies after exactly m steps: in ker A^k for all k >= m.
    for (int k = m; k <= n + 1; ++k) ++kernel_size[k];
  }
  std::vector<int> dim_ker(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    int d = 0;
    for (long x = kernel_size[k]; x > 1; x /= p) ++d;
    dim_ker[k] = d;
  }
  // #blocks of size >= m is dim ker A^m - dim ker A^(m-1).
  std::vector<int> blocks;
  for (int m = 1; m <= n; ++m) {
    const int at_least_m = dim_ker[m] - dim_ker[m - 1];
    const int at_least_next = dim_ker[m + 1] - dim_ker[m];
    for (int c = 0; c < at_least_m - at_least_next; ++c) blocks.push_back(m);
  }
  return blocks;
}

const int kPrimes[] = {2, 3, 5, 7, 11, 13};

} // namespace

TEST_CASE("brute-force oracle fixes the small derived Jordan types") {
  CHECK(brute_force_jordan(3, 3, 5, true) == std::vector<int>{1, 3, 5});
  CHECK(brute_force_jordan(2, 2, 3, false) == std::vector<int>{1, 3});
  CHECK(brute_force_jordan(2, 3, 3, true) == std::vector<int>{3, 3});
}

TEST_CASE("unipotent oracle on frozen small cases") {
  CHECK(unipotent_jordan_tensor(3, 3, 5).blocks == std::vector<int>{1, 3, 5});
  CHECK(unipotent_jordan_tensor(2, 3, 3).blocks == std::vector<int>{3, 3});
  CHECK(nilpotent_jordan_tensor(2, 2, 3).blocks == std::vector<int>{1, 3});
  CHECK(nilpotent_jordan_tensor(1, 1, 7).blocks == std::vector<int>{1});
}

TEST_CASE("rank-profile oracle agrees with enumeration for all tiny inputs") {
  for (int p : {2, 3}) {
    for (int r = 1; r <= p; ++r)
      for (int s = 1; s <= p; ++s) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(unipotent_jordan_tensor(r, s, p).blocks == brute_force_jordan(r, s, p, true));
        CHECK(nilpotent_jordan_tensor(r, s, p).blocks == brute_force_jordan(r, s, p, false));
      }
  }
}

TEST_CASE("tensoring with L_2 follows the two-term rule") {
  for (int p : kPrimes) {
    CHECK(unipotent_jordan_tensor(2, 1, p).blocks == std::vector<int>{2});
    for (int s = 2; s <= p - 1; ++s) {
      CHECK(unipotent_jordan_tensor(2, s, p).blocks == std::vector<int>{s - 1, s + 1});
    }
    CHECK(unipotent_jordan_tensor(2, p, p).blocks == std::vector<int>{p, p});
  }
}

TEST_CASE("tensoring with L_{p-1}") {
  for (int p : kPrimes) {
    if (p < 3) continue;
    for (int s = 1; s <= p; ++s) {
      const auto jt = unipotent_jordan_tensor(p - 1, s, p);
      CAPTURE(p);
      CAPTURE(s);
      if (s < p) CHECK(jt.multiplicity(p - s) == 1);
      CHECK(jt.multiplicity(p) == (s == p ? p - 1 : s - 1));
      CHECK(jt.total() == (p - 1) * s);
    }
  }
}

TEST_CASE("unit block is neutral") {
  for (int p : kPrimes)
    for (int s = 1; s <= p; ++s) CHECK(unipotent_jordan_tensor(1, s, p).blocks == std::vector<int>{s});
}

TEST_CASE("dimension conservation, symmetry and unipotent/nilpotent agreement") {
  for (int p : kPrimes) {
    for (int r = 1; r <= p; ++r) {
      for (int s = 1; s <= p; ++s) {
        const auto u = unipotent_jordan_tensor(r, s, p);
        CHECK(u.total() == r * s);
        CHECK(std::all_of(u.blocks.begin(), u.blocks.end(), [p](int b) { return b >= 1 && b <= p; }));
        CHECK(u == unipotent_jordan_tensor(s, r, p));
        CHECK(u == nilpotent_jordan_tensor(r, s, p));
      }
    }
  }
}

TEST_CASE("oracle argument errors") {
  CHECK_THROWS_AS(unipotent_jordan_tensor(0, 1, 5), InputError);
  CHECK_THROWS_AS(unipotent_jordan_tensor(6, 1, 5), InputError);
  CHECK_THROWS_AS(nilpotent_jordan_tensor(1, 1, 4), InputError);
}

TEST_CASE("green ring") {
  SUBCASE("p = 2: L2 L2 = 2 L2") {
    const auto g = green_ring(2);
    CHECK(multiply(g.ring, g.ring.basis(1), g.ring.basis(1)) == RingElement({0, 2}));
  }
  SUBCASE("row of L2 for p = 5") {
    const auto g = green_ring(5);
    const auto &r = g.ring;
    CHECK(multiply(r, r.basis(1), r.basis(0)) == r.basis(1));
    for (std::size_t s = 1; s + 1 < 5; ++s) {
      CHECK(multiply(r, r.basis(1), r.basis(s)) == r.basis(s - 1) + r.basis(s + 1));
    }
    CHECK(multiply(r, r.basis(1), r.basis(4)) == 2 * r.basis(4));
  }
  SUBCASE("axioms, flags and labels") {
    for (int p : kPrimes) {
      const auto g = green_ring(p);
      CHECK(validate(g.ring).empty());
      CHECK(g.ring.commutative());
      CHECK_FALSE(g.ring.fusion());
      CHECK(g.ring.unit() == 0);
      CHECK(g.ring.label(static_cast<std::size_t>(p - 1)) == "L" + std::to_string(p));
      for (std::size_t s = 0; s < g.ring.size(); ++s) CHECK(g.ring.dual(s) == s);
    }
  }
  SUBCASE("table agrees with the oracle") {
    const auto g = green_ring(7);
    for (int r = 1; r <= 7; ++r)
      for (int s = 1; s <= 7; ++s) {
        const auto jt = unipotent_jordan_tensor(r, s, 7);
        for (int m = 1; m <= 7; ++m) CHECK(g.ring.N(r - 1, s - 1, m - 1) == jt.multiplicity(m));
      }
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(green_ring(37), InputError);
    CHECK_THROWS_AS(green_ring(9), InputError);
  }
}
