#pragma once

#include "fusionlab/based_ring.hpp"
#include "fusionlab/charp.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fusionlab {

/// Sorted set of basis indices of an ambient ring.
struct Subring {
  std::vector<std::size_t> indices;

  bool contains(std::size_t i) const;
  std::size_t size() const { return indices.size(); }
  friend bool operator==(const Subring &, const Subring &) = default;
};

/// Contains the unit, closed under duality and under fusion.
bool is_subring(const BasedRing &ring, const Subring &s);

/// Smallest subring containing the seed.
Subring subring_closure(const BasedRing &ring, const std::vector<std::size_t> &seed);

/// All based subrings, sorted by size and then lexicographically.
std::vector<Subring> enumerate_subrings(const BasedRing &ring);

/// Finite group by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return table.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table[a][b]; }
};

struct UniversalGrading {
  FiniteGroup group;
  /// Group element of each basis index.
  std::vector<std::size_t> grade;
  /// Neutral component: the subring generated by all b b^*.
  Subring adjoint;
};

/// Whenever N[i][j][k] > 0, grade(k) = grade(i) grade(j); unit has grade 0.
bool is_grading(const BasedRing &ring, const FiniteGroup &group, const std::vector<std::size_t> &grade);

/// Commutative rings only; throws InputError otherwise.
UniversalGrading universal_grading(const BasedRing &ring);

struct GradedDimensionReport {
  bool holds = false;
  std::size_t group_order = 0;
  std::uint32_t total = 0;
  std::uint32_t neutral = 0;
  /// D_g = sum over grade g of dim(X) [X], coefficients mod p.
  std::vector<RingElement> class_sums;
  /// sum over grade g of dim(X)^2 mod p.
  std::vector<std::uint32_t> class_dimensions;
};

/// dim(C) = |G| dim(C_1) mod p.
GradedDimensionReport graded_dimension_identity(const BasedRing &ring, const DimHom &d,
                                                const UniversalGrading &grading);

/// Bijection sigma (a-index -> b-index) preserving unit, duality and all
/// structure constants, or nullopt.
std::optional<std::vector<std::size_t>> find_isomorphism(const BasedRing &a, const BasedRing &b);

/// Images of the source basis elements.
struct BasedHom {
  std::vector<RingElement> images;
  friend bool operator==(const BasedHom &, const BasedHom &) = default;
};

/// Exact check of H(unit) = unit, H(b^*) = H(b)^* and H(b_i) H(b_j) = sum_k N[i][j][k] H(b_k).
bool is_based_hom(const BasedRing &source, const BasedRing &target, const BasedHom &h);

/// Every FPdim-preserving based homomorphism with non-negative images.
std::vector<BasedHom> find_based_homs(const BasedRing &source, const BasedRing &target,
                                      double fp_tol = 1e-6);

} // namespace fusionlab
