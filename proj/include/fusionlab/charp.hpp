#pragma once

#include "fusionlab/based_ring.hpp"
#include "fusionlab/green.hpp"
#include "fusionlab/modp.hpp"
#include "fusionlab/numerics.hpp"
#include "fusionlab/verlinde.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusionlab {

/// A ring homomorphism K -> F_p given on the basis.
struct DimHom {
  int p = 0;
  std::vector<std::uint32_t> residues;

  std::uint32_t operator()(std::size_t i) const { return residues[i]; }
  std::uint32_t operator()(const RingElement &x) const;
};

/// Checks unit -> 1, compatibility with duality and multiplicativity on every
/// basis pair; throws InputError naming the first failing pair.
DimHom dim_hom(const BasedRing &ring, const std::vector<Int> &residues, int p);

/// dim(L_s) = s mod p.
DimHom canonical_dim_hom(const GreenRing &green);
DimHom canonical_dim_hom(const VerlindeRing &ver);

/// sum_i d(b_i)^2 mod p.
std::uint32_t global_dimension(const BasedRing &ring, const DimHom &d);

/// R = sum_i b_i^* b_i.
RingElement regular_dual_element(const BasedRing &ring);

/// G[i][j] = Tr(L_{b_i b_j}) mod p, L_x the left-multiplication matrix.
ModpMatrix trace_form_gram(const BasedRing &ring, int p);

/// Non-degeneracy of the trace form of K ⊗ F_p.
bool is_semisimple_mod_p(const BasedRing &ring, int p);

/// x^p in K ⊗ F_p, coefficients in [0, p).
RingElement pth_power(const BasedRing &ring, const RingElement &x, int p);

/// [Fr(b_i)] = sum_{j,s} m[j][s-1] b_j ⊠ L_s.
struct FrobeniusRow {
  std::vector<std::vector<Int>> m;

  friend bool operator==(const FrobeniusRow &, const FrobeniusRow &) = default;
  friend auto operator<=>(const FrobeniusRow &, const FrobeniusRow &) = default;
};

struct FrobeniusTable {
  int p = 0;
  /// One row per source basis element.
  std::vector<FrobeniusRow> rows;
};

struct FrobeniusSearchOptions {
  double fp_tol = 1e-6;
  /// Bound on sum m[j][s] is ceil(FPdim(b_i)) + slack.
  int slack = 1;
};

/// id ⊗ dim applied to a row: coefficient of b_j is sum_s m[j][s]·s mod p.
RingElement collapse_dimension(const FrobeniusRow &row, int p);

/// Every non-negative integer row whose id ⊗ dim image is [b_i]^p mod p and
/// whose FPdim matches FPdim(b_i), sorted.
std::vector<FrobeniusRow> frobenius_candidates(const BasedRing &ring, std::size_t i, int p,
                                               const FpDimVector &dims,
                                               const FrobeniusSearchOptions &options = {});

/// The closed-form table on Ver_p itself.
FrobeniusTable verlinde_frobenius_table(int p);

enum class FrobeniusType { Vec, SVec, VerPlus, Ver };

std::string to_string(FrobeniusType type);

/// Smallest of Vec, sVec, Ver_p^+, Ver_p containing every Ver_p component used
/// by the table. Throws InputError if the closure is none of them.
FrobeniusType frobenius_type(const FrobeniusTable &table, int p);

std::string format_frobenius_row(const BasedRing &ring, const FrobeniusRow &row);

} // namespace fusionlab
