#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fusionlab {

using Int = std::int64_t;

/// Malformed input: bad shapes, out-of-range indices, unparsable text.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer overflow in exact ring arithmetic. Never wraps silently.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

namespace detail {
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
} // namespace detail

/// Integer coefficient vector over the basis of some ring.
class RingElement {
public:
  RingElement() = default;
  explicit RingElement(std::size_t size) : coeffs_(size, 0) {}
  explicit RingElement(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  Int operator[](std::size_t i) const { return coeffs_[i]; }
  Int &operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Int> &coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  RingElement &operator+=(const RingElement &other);
  RingElement &operator-=(const RingElement &other);
  RingElement &operator*=(Int scalar);

  friend RingElement operator+(RingElement a, const RingElement &b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement &b) { return a -= b; }
  friend RingElement operator*(Int s, RingElement a) { return a *= s; }
  friend bool operator==(const RingElement &, const RingElement &) = default;
  friend auto operator<=>(const RingElement &, const RingElement &) = default;

private:
  std::vector<Int> coeffs_;
};

/// Plain data used to construct a BasedRing.
struct RingData {
  std::string name;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  /// Flattened N[i][j][k] with index (i*n + j)*n + k.
  std::vector<Int> constants;
  bool commutative = true;
  /// False for split Grothendieck rings of non-semisimple categories (Green
  /// rings): the dual-unit axiom is weakened and Frobenius reciprocity is not
  /// required.
  bool fusion = true;
};

/// A finite based ring: basis, unit, duality involution and non-negative
/// structure constants N[i][j][k] = multiplicity of b_k in b_i b_j.
///
/// Construction only checks shapes and index ranges; axioms are checked by
/// validate(). Immutable after construction.
class BasedRing {
public:
  explicit BasedRing(RingData data);

  const std::string &name() const { return data_.name; }
  std::size_t size() const { return data_.labels.size(); }
  const std::vector<std::string> &labels() const { return data_.labels; }
  const std::string &label(std::size_t i) const { return data_.labels.at(i); }
  /// Throws InputError for unknown labels.
  std::size_t index_of(std::string_view label) const;
  std::size_t unit() const { return data_.unit; }
  std::size_t dual(std::size_t i) const { return data_.dual[i]; }
  const std::vector<std::size_t> &duals() const { return data_.dual; }
  bool commutative() const { return data_.commutative; }
  bool fusion() const { return data_.fusion; }

  Int N(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = size();
    return data_.constants[(i * n + j) * n + k];
  }
  const RingData &data() const { return data_; }

  RingElement zero() const { return RingElement(size()); }
  RingElement one() const { return basis(data_.unit); }
  RingElement basis(std::size_t i) const;

  /// Same basis, constants and flags; names are ignored by structural code
  /// but compared here.
  friend bool operator==(const BasedRing &a, const BasedRing &b);

private:
  RingData data_;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string message;
};

/// Every axiom failure of the ring, each with witnessing indices. Empty iff
/// the ring is a valid based ring.
std::vector<Violation> validate(const BasedRing &ring);

/// Throws InputError describing the first violation, if any.
void require_valid(const BasedRing &ring);

RingElement multiply(const BasedRing &ring, const RingElement &x, const RingElement &y);
RingElement power(const BasedRing &ring, const RingElement &x, std::uint64_t n);

/// External product; basis pairs (i,j) in row-major order, labelled "a⊠b".
BasedRing box_product(const BasedRing &a, const BasedRing &b);

/// Restriction of the ring to a sorted index set. Throws InputError if the
/// set does not contain the unit or is not closed under duality and
/// multiplication.
BasedRing restrict_to(const BasedRing &ring, const std::vector<std::size_t> &indices,
                      std::string name);

/// Group ring of Z/n with basis 1, g, g^2, ..., g^(n-1).
BasedRing group_ring(std::size_t n);
BasedRing trivial_ring();
/// Basis {1, X} with X^2 = 1 + X.
BasedRing yang_lee_ring();

/// Parses "2*L1 + L3 - X"-style sums of basis labels.
RingElement parse_element(const BasedRing &ring, std::string_view text);
std::string format_element(const BasedRing &ring, const RingElement &x);

} // namespace fusionlab
