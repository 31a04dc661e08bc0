#pragma once

#include "fusionlab/based_ring.hpp"

#include <cstddef>
#include <vector>

namespace fusionlab {

/// Multiset of Jordan block sizes in [1, p], kept sorted ascending.
struct JordanType {
  int p = 0;
  std::vector<int> blocks;

  int multiplicity(int size) const;
  int total() const;
  friend bool operator==(const JordanType &, const JordanType &) = default;
};

/// Jordan type of J_r ⊗ J_s over F_p, with J_m the unipotent Jordan block of
/// size m. Blocks are read off the rank profile of A = J_r ⊗ J_s - I.
JordanType unipotent_jordan_tensor(int r, int s, int p);

/// Jordan type of N_r ⊗ I + I ⊗ N_s over F_p (x acting on a tensor product of
/// k[x]/x^p-modules).
JordanType nilpotent_jordan_tensor(int r, int s, int p);

/// Green ring of C_p with basis L1..Lp.
struct GreenRing {
  BasedRing ring;
  int p;
};

inline constexpr int kDefaultGreenBound = 31;

/// Built once per prime from the unipotent oracle and then cached.
GreenRing green_ring(int p, int bound = kDefaultGreenBound);

} // namespace fusionlab
