#include "fusionlab/modp.hpp"

#include "fusionlab/based_ring.hpp"

#include <utility>

namespace fusionlab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InputError("zero has no inverse mod p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

ModpMatrix::ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
}

bool ModpMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool ModpMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

ModpMatrix operator*(const ModpMatrix &a, const ModpMatrix &b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw InputError("matrix shape or modulus mismatch");
  ModpMatrix out(a.rows_, b.cols_, a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      const std::uint32_t *brow = &b.data_[k * b.cols_];
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) out.data_[r * out.cols_ + c] = static_cast<std::uint32_t>(acc[c]);
  }
  return out;
}

std::size_t rank(ModpMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = m.prime();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c);

  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rk) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rk * cols));
    }
    std::uint32_t *prow = &a[rk * cols];
    const std::uint64_t inv = mod_inverse(prow[col], static_cast<std::uint32_t>(p));
    for (std::size_t c = col; c < cols; ++c) prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      std::uint32_t *row = &a[r * cols];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t c = col; c < cols; ++c) {
        if (prow[c] != 0) row[c] = static_cast<std::uint32_t>((row[c] + neg * prow[c]) % p);
      }
    }
    ++rk;
  }
  return rk;
}

} // namespace fusionlab
