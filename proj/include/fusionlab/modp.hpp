#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fusionlab {

bool is_prime(std::int64_t n);

/// Reduces v into [0, p).
std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Dense matrix over F_p with entries kept in [0, p).
class ModpMatrix {
public:
  ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = mod_reduce(v, p_); }

  bool is_symmetric() const;
  bool is_zero() const;

  friend ModpMatrix operator*(const ModpMatrix &a, const ModpMatrix &b);
  friend bool operator==(const ModpMatrix &, const ModpMatrix &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// Rank over F_p by Gaussian elimination. Exact.
std::size_t rank(ModpMatrix m);

} // namespace fusionlab
