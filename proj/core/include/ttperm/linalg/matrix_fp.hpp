#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ttperm {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

// Inverse of a nonzero residue modulo the prime p.
Residue inverse_mod(Residue a, std::uint32_t p);

// Dense row-major matrix over the prime field F_p.
class MatrixFp {
 public:
  using Scalar = Residue;

  MatrixFp() = default;
  MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols);

  static MatrixFp identity(std::uint32_t p, std::size_t n);
  // Entries are given row-major as arbitrary integers and reduced into [0, p).
  static MatrixFp from_entries(std::uint32_t p, std::size_t rows, std::size_t cols,
                               std::span<const std::int64_t> entries);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Residue v) { data_[i * cols_ + j] = v % p_; }
  void add_to(std::size_t i, std::size_t j, Residue v) {
    auto& e = data_[i * cols_ + j];
    e = static_cast<Residue>((static_cast<std::uint64_t>(e) + v) % p_);
  }

  // Ring operations on scalars of this matrix's field.
  Residue add(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) + b) % p_);
  }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue from_int(std::int64_t v) const;
  bool is_zero_scalar(Residue a) const { return a == 0; }

  std::span<const Residue> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<Residue>& data() const { return data_; }

  bool is_zero() const;
  MatrixFp zeros_like(std::size_t rows, std::size_t cols) const { return {p_, rows, cols}; }
  MatrixFp transposed() const;
  MatrixFp submatrix(std::span<const std::size_t> row_idx,
                     std::span<const std::size_t> col_idx) const;
  MatrixFp scaled(Residue s) const;

  MatrixFp operator*(const MatrixFp& rhs) const;
  MatrixFp operator+(const MatrixFp& rhs) const;
  MatrixFp operator-(const MatrixFp& rhs) const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

  std::string to_string() const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

std::size_t rank_mod_p(const MatrixFp& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column of the
// reduced row echelon form.
std::vector<std::vector<Residue>> kernel_basis(const MatrixFp& m);

// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  MatrixFp reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm row_reduce(const MatrixFp& m);

std::optional<MatrixFp> inverse(const MatrixFp& m);

std::vector<Residue> apply(const MatrixFp& m, std::span<const Residue> v);

}  // namespace ttperm
