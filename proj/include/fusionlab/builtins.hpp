#pragma once

#include "fusionlab/ring_file.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fusionlab {

/// Named generators: ver<p>, green<p>, svec<p>, plus<p>, group<n>, yanglee,
/// trivial. Rings with a canonical dimension carry it (yanglee uses p = 5).
RingFile builtin_ring(std::string_view name);

/// The catalogue used for property sweeps.
std::vector<std::string> shipped_ring_names();

} // namespace fusionlab
