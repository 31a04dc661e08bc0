#include "fusionlab/numerics.hpp"

#include <cmath>
#include <string>

namespace fusionlab {

namespace {

struct PerronResult {
  double value;
  double step;
  std::size_t iterations;
};

// Shifted power iteration on M = N_i + I. The shift makes M primitive on each
// irreducible block, so the iteration does not oscillate on permutation rows.
PerronResult perron_root(const BasedRing &ring, std::size_t i, const FpDimOptions &options) {
  const std::size_t n = ring.size();
  // (N_i)[k][j] = N[i][j][k]: column j is b_i b_j.
  std::vector<double> m(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m[k * n + j] = static_cast<double>(ring.N(i, j, k));
    m[j * n + j] += 1.0;
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = 0.0;
  double step = 0.0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    double norm2 = 0.0;
    double rayleigh = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m[k * n + j] * x[j];
      y[k] = acc;
      rayleigh += acc * x[k];
      norm2 += acc * acc;
    }
    const double norm = std::sqrt(norm2);
    for (std::size_t k = 0; k < n; ++k) x[k] = y[k] / norm;
    step = std::abs(rayleigh - previous);
    if (it > 1 && step < options.tolerance) return {rayleigh - 1.0, step, it};
    previous = rayleigh;
  }
  throw NonConvergence("power iteration for basis element '" + ring.label(i) +
                           "' did not converge in " + std::to_string(options.max_iterations) +
                           " iterations",
                       x, previous - 1.0);
}

} // namespace

FpDimVector fp_dims(const BasedRing &ring, const FpDimOptions &options) {
  if (!(options.tolerance > 0.0)) throw InputError("FPdim tolerance must be positive");
  FpDimVector out;
  out.values.resize(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i == ring.unit()) {
      out.values[i] = 1.0;
      continue;
    }
    const auto r = perron_root(ring, i, options);
    out.values[i] = r.value;
    out.achieved_tolerance = std::max(out.achieved_tolerance, r.step);
    out.iterations = std::max(out.iterations, r.iterations);
  }
  return out;
}

double fp_dim_element(const RingElement &x, const FpDimVector &dims) {
  if (x.size() != dims.size()) throw InputError("element size does not match FPdim vector");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<double>(x[i]) * dims[i];
  return acc;
}

double fp_dim_category(const FpDimVector &dims) {
  double acc = 0.0;
  for (double v : dims.values) acc += v * v;
  return acc;
}

} // namespace fusionlab
