#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ttperm/linalg/matrix_fp.hpp"

namespace ttperm {

using Integer = mpz_class;

// Dense row-major integer matrix with arbitrary-precision entries.
class MatrixZ {
 public:
  using Scalar = Integer;

  MatrixZ() = default;
  MatrixZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatrixZ identity(std::size_t n);
  static MatrixZ from_entries(std::size_t rows, std::size_t cols,
                              std::span<const std::int64_t> entries);
  static MatrixZ from_entries(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Integer& v) { data_[i * cols_ + j] = v; }
  void add_to(std::size_t i, std::size_t j, const Integer& v) { data_[i * cols_ + j] += v; }

  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  Integer neg(const Integer& a) const { return -a; }
  Integer from_int(std::int64_t v) const { return Integer(static_cast<long>(v)); }
  bool is_zero_scalar(const Integer& a) const { return a == 0; }

  const std::vector<Integer>& data() const { return data_; }

  bool is_zero() const;
  MatrixZ zeros_like(std::size_t rows, std::size_t cols) const { return {rows, cols}; }
  MatrixZ transposed() const;
  MatrixZ submatrix(std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx) const;

  MatrixZ operator*(const MatrixZ& rhs) const;
  MatrixZ operator+(const MatrixZ& rhs) const;

  friend bool operator==(const MatrixZ&, const MatrixZ&) = default;

  MatrixFp reduce_mod(std::uint32_t q) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Invariant factors d_1 | d_2 | ... of m, one per diagonal position
// (min(rows, cols) of them), nonnegative, nonzero factors first.
std::vector<Integer> smith_normal_form(const MatrixZ& m);

// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank_over_q(const MatrixZ& m);

}  // namespace ttperm
