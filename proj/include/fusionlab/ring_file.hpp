#pragma once

#include "fusionlab/based_ring.hpp"
#include "fusionlab/charp.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fusionlab {

/// A ring together with its optional dimension homomorphism.
struct RingFile {
  BasedRing ring;
  std::optional<DimHom> dim;
};

/// Syntax only; axioms are not checked. Errors carry the line number.
RingFile parse_ring_text(std::string_view text);

/// parse_ring_text followed by validate() and the DimHom checks.
RingFile parse_ring_file(std::string_view text);

/// Canonical text: ring, prime, basis, unit, dual pairs, N triples sorted by
/// (i,j,k) without zeros, commutative, fusion (only when false), dims.
std::string write_ring_file(const BasedRing &ring, const std::optional<DimHom> &dim = std::nullopt);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

} // namespace fusionlab
