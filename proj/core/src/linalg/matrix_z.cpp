#include "ttperm/linalg/matrix_z.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ttperm/error.hpp"

namespace ttperm {

MatrixZ MatrixZ::identity(std::size_t n) {
  MatrixZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

MatrixZ MatrixZ::from_entries(std::size_t rows, std::size_t cols,
                              std::span<const std::int64_t> entries) {
  std::vector<Integer> v;
  v.reserve(entries.size());
  for (auto e : entries) v.emplace_back(static_cast<long>(e));
  return from_entries(rows, cols, std::move(v));
}

MatrixZ MatrixZ::from_entries(std::size_t rows, std::size_t cols, std::vector<Integer> entries) {
  if (entries.size() != rows * cols)
    throw InvalidArgument("MatrixZ::from_entries: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries.size()));
  MatrixZ m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

bool MatrixZ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& e) { return e == 0; });
}

MatrixZ MatrixZ::transposed() const {
  MatrixZ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

MatrixZ MatrixZ::submatrix(std::span<const std::size_t> row_idx,
                           std::span<const std::size_t> col_idx) const {
  MatrixZ s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s.data_[i * col_idx.size() + j] = data_[row_idx[i] * cols_ + col_idx[j]];
  return s;
}

MatrixZ MatrixZ::operator*(const MatrixZ& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("MatrixZ: incompatible product");
  MatrixZ out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] += a * rhs.data_[k * rhs.cols_ + j];
    }
  return out;
}

MatrixZ MatrixZ::operator+(const MatrixZ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("MatrixZ: shape mismatch");
  MatrixZ out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

MatrixFp MatrixZ::reduce_mod(std::uint32_t q) const {
  MatrixFp out(q, rows_, cols_);
  const Integer mod(q);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), data_[i * cols_ + j].get_mpz_t(), mod.get_mpz_t());
      out.set(i, j, static_cast<Residue>(r.get_ui()));
    }
  return out;
}

std::string MatrixZ::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i * cols_ + j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Integer> smith_normal_form(const MatrixZ& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<Integer> a = input.data();
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> factors;
  factors.reserve(diag);

  for (std::size_t t = 0; t < diag; ++t) {
    // pick the smallest nonzero entry of the remaining block as pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (at(i, j) != 0 && (!found || abs(at(i, j)) < abs(at(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;

    for (;;) {
      if (pi != t)
        for (std::size_t j = t; j < cols; ++j) std::swap(at(pi, j), at(t, j));
      if (pj != t)
        for (std::size_t i = t; i < rows; ++i) std::swap(at(i, pj), at(i, t));
      const Integer piv = at(t, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) dirty = true;
      }

      if (!dirty) {
        // row and column cleared; enforce divisibility on the remaining block
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t + 1; i < rows && bi == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (at(i, j) % piv != 0) {
              bi = i;
              bj = j;
              break;
            }
        if (bi == rows) break;
        // add the offending row to the pivot row and keep reducing
        for (std::size_t j = t; j < cols; ++j) at(t, j) += at(bi, j);
        (void)bj;
      }
      // next pivot: smallest nonzero entry in row t / column t
      pi = t;
      pj = t;
      for (std::size_t i = t; i < rows; ++i)
        if (at(i, t) != 0 && (at(pi, pj) == 0 || abs(at(i, t)) < abs(at(pi, pj)))) {
          pi = i;
          pj = t;
        }
      for (std::size_t j = t; j < cols; ++j)
        if (at(t, j) != 0 && (at(pi, pj) == 0 || abs(at(t, j)) < abs(at(pi, pj)))) {
          pi = t;
          pj = j;
        }
    }
    factors.push_back(abs(at(t, t)));
  }
  while (factors.size() < diag) factors.emplace_back(0);
  return factors;
}

std::size_t rank_over_q(const MatrixZ& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a = m.data();
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace ttperm
