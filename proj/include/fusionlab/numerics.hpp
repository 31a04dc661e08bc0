#pragma once

#include "fusionlab/based_ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fusionlab {

struct FpDimOptions {
  /// Stop once successive Rayleigh quotients differ by less than this.
  double tolerance = 1e-12;
  std::size_t max_iterations = 1'000'000;
};

/// Frobenius-Perron dimension of every basis element.
struct FpDimVector {
  std::vector<double> values;
  /// Largest final Rayleigh-quotient step over all basis elements.
  double achieved_tolerance = 0.0;
  /// Largest iteration count over all basis elements.
  std::size_t iterations = 0;

  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string &what, std::vector<double> last_iterate, double last_value)
      : std::runtime_error(what), last_iterate(std::move(last_iterate)), last_value(last_value) {}
  std::vector<double> last_iterate;
  double last_value;
};

/// Perron eigenvalue of each left-multiplication matrix, by power iteration on
/// N_i + I from the all-ones vector.
FpDimVector fp_dims(const BasedRing &ring, const FpDimOptions &options = {});

double fp_dim_element(const RingElement &x, const FpDimVector &dims);
double fp_dim_category(const FpDimVector &dims);

} // namespace fusionlab
