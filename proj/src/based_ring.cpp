#include "fusionlab/based_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fusionlab {

namespace detail {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in ring arithmetic (addition)");
  }
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in ring arithmetic (multiplication)");
  }
  return r;
}

} // namespace detail

using detail::checked_add;
using detail::checked_mul;

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

bool RingElement::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; });
}

RingElement &RingElement::operator+=(const RingElement &other) {
  if (other.size() != size()) {
    throw InputError("ring element size mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

RingElement &RingElement::operator-=(const RingElement &other) {
  if (other.size() != size()) {
    throw InputError("ring element size mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    Int r;
    if (__builtin_sub_overflow(coeffs_[i], other.coeffs_[i], &r)) {
      throw OverflowError("integer overflow in ring arithmetic (subtraction)");
    }
    coeffs_[i] = r;
  }
  return *this;
}

RingElement &RingElement::operator*=(Int scalar) {
  for (auto &c : coeffs_) {
    c = checked_mul(c, scalar);
  }
  return *this;
}

BasedRing::BasedRing(RingData data) : data_(std::move(data)) {
  const std::size_t n = data_.labels.size();
  if (n == 0) {
    throw InputError("ring '" + data_.name + "' has an empty basis");
  }
  if (data_.unit >= n) {
    throw InputError("unit index out of range");
  }
  if (data_.dual.size() != n) {
    throw InputError("dual map has wrong length");
  }
  for (auto d : data_.dual) {
    if (d >= n) {
      throw InputError("dual index out of range");
    }
  }
  if (data_.constants.size() != n * n * n) {
    throw InputError("structure constants tensor is not cubic with side " + std::to_string(n));
  }
}

std::size_t BasedRing::index_of(std::string_view label) const {
  auto it = std::find(data_.labels.begin(), data_.labels.end(), label);
  if (it == data_.labels.end()) {
    throw InputError("unknown basis label '" + std::string(label) + "' in ring '" +
                     data_.name + "'");
  }
  return static_cast<std::size_t>(it - data_.labels.begin());
}

RingElement BasedRing::basis(std::size_t i) const {
  RingElement e(size());
  e[i] = 1;
  return e;
}

bool operator==(const BasedRing &a, const BasedRing &b) {
  const auto &x = a.data_;
  const auto &y = b.data_;
  return x.name == y.name && x.labels == y.labels && x.unit == y.unit && x.dual == y.dual &&
         x.constants == y.constants && x.commutative == y.commutative && x.fusion == y.fusion;
}

namespace {

std::string join_indices(const std::vector<std::size_t> &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << ')';
  return os.str();
}

// Records the first witness of an axiom plus how many witnesses there were.
class AxiomCheck {
public:
  AxiomCheck(std::string axiom, std::vector<Violation> &out) : axiom_(std::move(axiom)), out_(out) {}
  AxiomCheck(const AxiomCheck &) = delete;
  AxiomCheck &operator=(const AxiomCheck &) = delete;

  void fail(std::vector<std::size_t> indices, std::string message) {
    if (count_++ == 0) {
      first_ = Violation{axiom_, std::move(indices), std::move(message)};
    }
  }
  ~AxiomCheck() {
    if (count_ > 0) {
      first_.message += " at " + join_indices(first_.indices);
      if (count_ > 1) {
        first_.message += " (" + std::to_string(count_) + " witnesses)";
      }
      out_.push_back(std::move(first_));
    }
  }

private:
  std::string axiom_;
  std::vector<Violation> &out_;
  Violation first_;
  std::size_t count_ = 0;
};

} // namespace

std::vector<Violation> validate(const BasedRing &ring) {
  std::vector<Violation> out;
  const std::size_t n = ring.size();
  const std::size_t u = ring.unit();

  {
    AxiomCheck check("labels", out);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.insert(ring.label(i)).second) {
        check.fail({i}, "duplicate label '" + ring.label(i) + "'");
      }
    }
  }
  {
    AxiomCheck check("nonnegativity", out);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (ring.N(i, j, k) < 0) check.fail({i, j, k}, "negative structure constant");
  }
  {
    AxiomCheck check("unit", out);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Int expect = j == k ? 1 : 0;
        if (ring.N(u, j, k) != expect || ring.N(j, u, k) != expect) {
          check.fail({j, k}, "unit does not act as identity");
        }
      }
    }
  }
  {
    AxiomCheck check("involution", out);
    if (ring.dual(u) != u) {
      check.fail({u}, "dual of unit is not unit");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (ring.dual(ring.dual(i)) != i) {
        check.fail({i}, "dual is not an involution");
      }
    }
  }
  {
    AxiomCheck check("dual-unit", out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Int c = ring.N(i, j, u);
        const bool is_dual = j == ring.dual(i);
        bool ok;
        if (ring.fusion()) {
          ok = c == (is_dual ? 1 : 0);
        } else {
          ok = c == 0 || (c == 1 && is_dual);
        }
        if (!ok) {
          check.fail({i, j}, "unit multiplicity in b_i b_j inconsistent with duality");
        }
      }
    }
  }
  {
    AxiomCheck check("associativity", out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            Int lhs = 0;
            Int rhs = 0;
            for (std::size_t m = 0; m < n; ++m) {
              lhs = checked_add(lhs, checked_mul(ring.N(i, j, m), ring.N(m, k, l)));
              rhs = checked_add(rhs, checked_mul(ring.N(j, k, m), ring.N(i, m, l)));
            }
            if (lhs != rhs) {
              check.fail({i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)");
              break;
            }
          }
        }
      }
    }
  }
  if (ring.fusion()) {
    AxiomCheck check("frobenius-reciprocity", out);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Int c = ring.N(i, j, k);
          if (c != ring.N(ring.dual(i), k, j) || c != ring.N(k, ring.dual(j), i)) {
            check.fail({i, j, k}, "N[i][j][k] differs from N[i*][k][j] or N[k][j*][i]");
          }
        }
  }
  if (ring.commutative()) {
    AxiomCheck check("commutativity", out);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (ring.N(i, j, k) != ring.N(j, i, k)) check.fail({i, j, k}, "b_i b_j != b_j b_i");
  }
  return out;
}

void require_valid(const BasedRing &ring) {
  auto violations = validate(ring);
  if (!violations.empty()) {
    const auto &v = violations.front();
    throw InputError("ring '" + ring.name() + "' violates " + v.axiom + ": " + v.message);
  }
}

RingElement multiply(const BasedRing &ring, const RingElement &x, const RingElement &y) {
  const std::size_t n = ring.size();
  if (x.size() != n || y.size() != n) {
    throw InputError("element size does not match basis size of '" + ring.name() + "'");
  }
  RingElement z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Int xy = checked_mul(x[i], y[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (const Int c = ring.N(i, j, k); c != 0) {
          z[k] = checked_add(z[k], checked_mul(xy, c));
        }
      }
    }
  }
  return z;
}

RingElement power(const BasedRing &ring, const RingElement &x, std::uint64_t n) {
  RingElement result = ring.one();
  RingElement base = x;
  if (x.size() != ring.size()) {
    throw InputError("element size does not match basis size of '" + ring.name() + "'");
  }
  while (n > 0) {
    if (n & 1u) result = multiply(ring, result, base);
    n >>= 1u;
    if (n > 0) base = multiply(ring, base, base);
  }
  return result;
}

BasedRing box_product(const BasedRing &a, const BasedRing &b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  RingData d;
  d.name = a.name() + "⊠" + b.name();
  d.labels.reserve(n);
  d.dual.resize(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      d.labels.push_back(a.label(i) + "⊠" + b.label(j));
      d.dual[i * nb + j] = a.dual(i) * nb + b.dual(j);
    }
  }
  d.unit = a.unit() * nb + b.unit();
  d.commutative = a.commutative() && b.commutative();
  d.fusion = a.fusion() && b.fusion();
  d.constants.assign(n * n * n, 0);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < na; ++j1)
      for (std::size_t k1 = 0; k1 < na; ++k1) {
        const Int c1 = a.N(i1, j1, k1);
        if (c1 == 0) continue;
        for (std::size_t i2 = 0; i2 < nb; ++i2)
          for (std::size_t j2 = 0; j2 < nb; ++j2)
            for (std::size_t k2 = 0; k2 < nb; ++k2) {
              const Int c2 = b.N(i2, j2, k2);
              if (c2 == 0) continue;
              const std::size_t i = i1 * nb + i2;
              const std::size_t j = j1 * nb + j2;
              const std::size_t k = k1 * nb + k2;
              d.constants[(i * n + j) * n + k] = checked_mul(c1, c2);
            }
      }
  return BasedRing(std::move(d));
}

BasedRing restrict_to(const BasedRing &ring, const std::vector<std::size_t> &indices,
                      std::string name) {
  const std::size_t n = ring.size();
  std::vector<long> position(n, -1);
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= n) throw InputError("subring index out of range");
    if (a > 0 && indices[a] <= indices[a - 1]) throw InputError("subring indices not sorted");
    position[indices[a]] = static_cast<long>(a);
  }
  if (position[ring.unit()] < 0) throw InputError("subring does not contain the unit");
  const std::size_t m = indices.size();
  RingData d;
  d.name = std::move(name);
  d.unit = static_cast<std::size_t>(position[ring.unit()]);
  d.commutative = ring.commutative();
  d.fusion = ring.fusion();
  d.constants.assign(m * m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    d.labels.push_back(ring.label(indices[a]));
    const long pd = position[ring.dual(indices[a])];
    if (pd < 0) throw InputError("subring is not closed under duality");
    d.dual.push_back(static_cast<std::size_t>(pd));
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        const Int c = ring.N(indices[a], indices[b], k);
        if (c == 0) continue;
        if (position[k] < 0) {
          throw InputError("subring is not closed under multiplication: " +
                           ring.label(indices[a]) + "*" + ring.label(indices[b]) + " contains " +
                           ring.label(k));
        }
        d.constants[(a * m + b) * m + static_cast<std::size_t>(position[k])] = c;
      }
    }
  }
  return BasedRing(std::move(d));
}

BasedRing group_ring(std::size_t n) {
  if (n == 0) throw InputError("group_ring needs n >= 1");
  RingData d;
  d.name = "Z" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    d.dual.push_back((n - i) % n);
  }
  d.unit = 0;
  d.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.constants[(i * n + j) * n + (i + j) % n] = 1;
  return BasedRing(std::move(d));
}

BasedRing trivial_ring() {
  RingData d;
  d.name = "Vec";
  d.labels = {"1"};
  d.dual = {0};
  d.constants = {1};
  return BasedRing(std::move(d));
}

BasedRing yang_lee_ring() {
  RingData d;
  d.name = "YangLee";
  d.labels = {"1", "X"};
  d.dual = {0, 1};
  d.constants.assign(8, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Int & {
    return d.constants[(i * 2 + j) * 2 + k];
  };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  at(1, 1, 0) = 1;
  at(1, 1, 1) = 1;
  return BasedRing(std::move(d));
}

RingElement parse_element(const BasedRing &ring, std::string_view text) {
  RingElement x = ring.zero();
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto is_term_char = [](char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '*';
  };
  skip_ws();
  if (pos == text.size()) throw InputError("empty element expression");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    Int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw InputError("expected '+' or '-' in element '" + std::string(text) + "'");
    }
    first = false;
    std::size_t start = pos;
    while (pos < text.size() && is_term_char(text[pos])) ++pos;
    std::string token(text.substr(start, pos - start));
    if (token.empty()) throw InputError("missing term in element '" + std::string(text) + "'");
    Int coeff = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      try {
        std::size_t used = 0;
        coeff = std::stoll(token, &used);
        if (used != token.size()) throw InputError("bad coefficient");
      } catch (const std::logic_error &) {
        throw InputError("bad coefficient '" + token + "' in element");
      }
      start = pos;
      while (pos < text.size() && is_term_char(text[pos])) ++pos;
      token = std::string(text.substr(start, pos - start));
      if (token.empty()) throw InputError("missing label after '*' in element");
    }
    const std::size_t idx = ring.index_of(token);
    x[idx] = checked_add(x[idx], checked_mul(sign, coeff));
  }
  return x;
}

std::string format_element(const BasedRing &ring, const RingElement &x) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int c = x[i];
    if (c == 0) continue;
    if (any) {
      os << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      os << '-';
    }
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << ring.label(i);
    any = true;
  }
  return any ? os.str() : "0";
}

} // namespace fusionlab
