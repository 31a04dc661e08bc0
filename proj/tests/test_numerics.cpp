#include <doctest.h>

#include "fusionlab/builtins.hpp"
#include "fusionlab/numerics.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/verlinde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace fusionlab;

namespace {

// Closed form for the Verlinde ring: FPdim(L_s) = sin(pi s / p) / sin(pi / p).
double verlinde_fpdim(int s, int p) {
  return std::sin(std::numbers::pi * s / p) / std::sin(std::numbers::pi / p);
}

} // namespace

TEST_CASE("unit has FPdim exactly 1") {
  for (const auto &name : shipped_ring_names()) {
    const auto ring = builtin_ring(name).ring;
    CHECK(fp_dims(ring)[ring.unit()] == 1.0);
  }
}

TEST_CASE("golden ratio in Ver_5 and Yang-Lee") {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const auto v5 = fp_dims(verlinde_ring(5).ring);
  CHECK(std::abs(v5[1] - 1.6180339887498949) < 1e-9);
  CHECK(std::abs(v5[1] - phi) < 1e-9);
  const auto yl = yang_lee_ring();
  const auto d = fp_dims(yl);
  CHECK(std::abs(fp_dim_element(multiply(yl, yl.basis(1), yl.basis(1)), d) - phi * phi) < 1e-8);
  CHECK(std::abs(fp_dim_category(d) - 3.6180339887498949) < 1e-8);
  CHECK(fp_dim_element(yl.one(), d) == 1.0);
  CHECK(fp_dim_element(yl.zero(), d) == 0.0);
}

TEST_CASE("Verlinde FPdims match the closed form") {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto d = fp_dims(verlinde_ring(p).ring);
    for (int s = 1; s < p; ++s) CHECK(std::abs(d[static_cast<std::size_t>(s - 1)] - verlinde_fpdim(s, p)) < 1e-9);
  }
}

TEST_CASE("L2 is the smallest non-invertible and is irrational") {
  for (int p : {7, 11, 13}) {
    const auto d = fp_dims(verlinde_ring(p).ring);
    for (int s = 3; s <= p - 3; ++s) CHECK(d[static_cast<std::size_t>(s - 1)] > d[1]);
    CHECK(std::abs(d[1] - std::round(d[1])) > 1e-6);
  }
}

TEST_CASE("pointed and Green rings") {
  for (std::size_t n : {1u, 2u, 5u, 8u}) {
    const auto d = fp_dims(group_ring(n));
    for (double v : d.values) CHECK(std::abs(v - 1.0) < 1e-9);
    CHECK(std::abs(fp_dim_category(d) - static_cast<double>(n)) < 1e-9);
  }
  // Green ring: dimension map L_s -> s is the positive homomorphism.
  const auto g = fp_dims(builtin_ring("green5").ring);
  for (int s = 1; s <= 5; ++s) CHECK(std::abs(g[static_cast<std::size_t>(s - 1)] - s) < 1e-9);
  CHECK(fp_dim_category(fp_dims(trivial_ring())) == 1.0);
}

TEST_CASE("FPdim is a ring homomorphism on random non-negative elements") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (const auto &name : shipped_ring_names()) {
    const auto ring = builtin_ring(name).ring;
    const auto d = fp_dims(ring);
    for (double v : d.values) CHECK(v >= 1.0 - 1e-9);
    for (int trial = 0; trial < 20; ++trial) {
      RingElement x = ring.zero();
      RingElement y = ring.zero();
      for (std::size_t i = 0; i < ring.size(); ++i) {
        x[i] = coeff(rng);
        y[i] = coeff(rng);
      }
      const double lhs = fp_dim_element(multiply(ring, x, y), d);
      const double rhs = fp_dim_element(x, d) * fp_dim_element(y, d);
      CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("box products multiply global FPdims") {
  const std::vector<std::string> names{"yanglee", "ver7", "group3", "svec5"};
  for (const auto &a : names)
    for (const auto &b : names) {
      const auto ra = builtin_ring(a).ring;
      const auto rb = builtin_ring(b).ring;
      const double prod = fp_dim_category(fp_dims(box_product(ra, rb)));
      CHECK(std::abs(prod - fp_dim_category(fp_dims(ra)) * fp_dim_category(fp_dims(rb))) < 1e-6);
    }
}

TEST_CASE("FPdims are invariant under basis permutation") {
  const auto ring = verlinde_ring(7).ring;
  const std::vector<std::size_t> perm{3, 0, 5, 1, 4, 2}; // new index a holds old perm[a]
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inv[perm[a]] = a;
  RingData d;
  d.name = "perm";
  const std::size_t n = perm.size();
  for (std::size_t a = 0; a < n; ++a) {
    d.labels.push_back(ring.label(perm[a]));
    d.dual.push_back(inv[ring.dual(perm[a])]);
  }
  d.unit = inv[ring.unit()];
  d.constants.assign(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) d.constants[(a * n + b) * n + c] = ring.N(perm[a], perm[b], perm[c]);
  const BasedRing permuted(d);
  REQUIRE(validate(permuted).empty());
  const auto d0 = fp_dims(ring);
  const auto d1 = fp_dims(permuted);
  for (std::size_t a = 0; a < n; ++a) CHECK(std::abs(d1[a] - d0[perm[a]]) < 1e-9);
}

TEST_CASE("subrings never exceed the ambient global FPdim") {
  for (const auto &name : shipped_ring_names()) {
    const auto ring = builtin_ring(name).ring;
    const double total = fp_dim_category(fp_dims(ring));
    for (const auto &sub : enumerate_subrings(ring)) {
      const auto r = restrict_to(ring, sub.indices, "sub");
      CHECK(fp_dim_category(fp_dims(r)) <= total + 1e-6);
    }
  }
}

TEST_CASE("non-convergence carries the last iterate") {
  FpDimOptions opts;
  opts.max_iterations = 1;
  try {
    fp_dims(verlinde_ring(7).ring, opts);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence &e) {
    CHECK(e.last_iterate.size() == 6);
  }
  opts.tolerance = 0.0;
  CHECK_THROWS_AS(fp_dims(trivial_ring(), opts), InputError);
}
