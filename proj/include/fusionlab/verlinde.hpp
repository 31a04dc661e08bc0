#pragma once

#include "fusionlab/based_ring.hpp"
#include "fusionlab/green.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fusionlab {

/// Raised when a construction exists only for larger primes.
class UndefinedForPrime : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The universal Verlinde ring on L1..L(p-1). Basis index s-1 holds L_s.
struct VerlindeRing {
  BasedRing ring;
  int p;
  /// Subscripts {1, p-1}; empty for p = 2.
  std::vector<int> svec;
  /// Odd subscripts 1, 3, ..., p-2; empty for p <= 3.
  std::vector<int> plus;
};

/// Fusion rule [L_r][L_s] = sum_{i=1}^{c} [L_{|r-s|+2i-1}], c = min(r, s, p-r, p-s).
VerlindeRing verlinde_ring(int p);

/// Drops L_p (the only indecomposable of dimension 0 mod p) from the Green ring.
VerlindeRing quotient_green(const GreenRing &green);

/// Subring on {L1, L(p-1)}; needs p > 2.
BasedRing svec_subring(int p);
/// Subring on the odd subscripts; needs p > 3.
BasedRing plus_subring(int p);

/// Subscripts (a, b) with Fr(L_s) = L_a ⊠ L_b: (1, s) for odd s, (p-1, p-s) for even s.
std::pair<int, int> frobenius_on_verlinde(int s, int p);

/// 1 for odd s, p-1 for even s; L_s * L_{δ_s} has odd subscript.
int parity_twist(int s, int p);

} // namespace fusionlab
