#include "ttperm/linalg/matrix_fp.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ttperm/error.hpp"

namespace ttperm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue inverse_mod(Residue a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw InvalidArgument("inverse_mod: zero has no inverse");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<Residue>(t);
}

MatrixFp::MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(p)) throw InvalidArgument("MatrixFp: modulus " + std::to_string(p) + " is not prime");
}

MatrixFp MatrixFp::identity(std::uint32_t p, std::size_t n) {
  MatrixFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

MatrixFp MatrixFp::from_entries(std::uint32_t p, std::size_t rows, std::size_t cols,
                                std::span<const std::int64_t> entries) {
  if (entries.size() != rows * cols)
    throw InvalidArgument("MatrixFp::from_entries: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries.size()));
  MatrixFp m(p, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = m.from_int(entries[k]);
  return m;
}

Residue MatrixFp::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

bool MatrixFp::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue e) { return e == 0; });
}

MatrixFp MatrixFp::transposed() const {
  MatrixFp t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

MatrixFp MatrixFp::submatrix(std::span<const std::size_t> row_idx,
                             std::span<const std::size_t> col_idx) const {
  MatrixFp s(p_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s.data_[i * col_idx.size() + j] = data_[row_idx[i] * cols_ + col_idx[j]];
  return s;
}

MatrixFp MatrixFp::scaled(Residue s) const {
  MatrixFp r = *this;
  for (auto& e : r.data_) e = mul(e, s % p_);
  return r;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_)
    throw InvalidArgument("MatrixFp: incompatible product " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                          std::to_string(rhs.cols_));
  MatrixFp out(p_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Residue* b = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += a * b[j];
      // keep the accumulator far from overflow for large moduli
      if ((k & 1023) == 1023)
        for (auto& x : acc) x %= p_;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      out.data_[i * rhs.cols_ + j] = static_cast<Residue>(acc[j] % p_);
  }
  return out;
}

MatrixFp MatrixFp::operator+(const MatrixFp& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidArgument("MatrixFp: shape mismatch in sum");
  MatrixFp out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = add(data_[k], rhs.data_[k]);
  return out;
}

MatrixFp MatrixFp::operator-(const MatrixFp& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidArgument("MatrixFp: shape mismatch in difference");
  MatrixFp out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = add(data_[k], neg(rhs.data_[k]));
  return out;
}

std::string MatrixFp::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i * cols_ + j];
    os << "]";
  }
  os << "] mod " << p_;
  return os.str();
}

namespace {

// In-place Gaussian elimination on a row-major buffer. With `full` set the
// result is the reduced row echelon form; otherwise only rows below each pivot
// are cleared. Returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<Residue>& a, std::size_t rows, std::size_t cols,
                                   std::uint32_t p, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    Residue* prow = a.data() + r * cols;
    if (prow[c] != 1) {
      const std::uint64_t inv = inverse_mod(prow[c], p);
      for (std::size_t j = c; j < cols; ++j)
        prow[j] = static_cast<Residue>((prow[j] * inv) % p);
    }
    const std::size_t start = full ? 0 : r + 1;
    for (std::size_t i = start; i < rows; ++i) {
      if (i == r) continue;
      Residue* row = a.data() + i * cols;
      const Residue f = row[c];
      if (f == 0) continue;
      if (p == 2) {
        for (std::size_t j = c; j < cols; ++j) row[j] ^= prow[j];
      } else {
        const std::uint64_t g = p - f;
        for (std::size_t j = c; j < cols; ++j)
          if (prow[j]) row[j] = static_cast<Residue>((row[j] + g * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const MatrixFp& m) {
  if (m.empty()) return 0;
  std::vector<Residue> a = m.data();
  return eliminate(a, m.rows(), m.cols(), m.modulus(), false).size();
}

EchelonForm row_reduce(const MatrixFp& m) {
  std::vector<Residue> a = m.data();
  auto pivots = eliminate(a, m.rows(), m.cols(), m.modulus(), true);
  MatrixFp reduced(m.modulus(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced.set(i, j, a[i * m.cols() + j]);
  return {std::move(reduced), std::move(pivots)};
}

std::vector<std::vector<Residue>> kernel_basis(const MatrixFp& m) {
  const auto p = m.modulus();
  const auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Residue e = rref(r, free);
      if (e) v[pivots[r]] = p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<MatrixFp> inverse(const MatrixFp& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto p = m.modulus();
  std::vector<Residue> a(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  const auto pivots = eliminate(a, n, 2 * n, p, true);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  MatrixFp inv(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, a[i * 2 * n + n + j]);
  return inv;
}

std::vector<Residue> apply(const MatrixFp& m, std::span<const Residue> v) {
  if (v.size() != m.cols()) throw InvalidArgument("apply: vector length mismatch");
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + std::uint64_t{m(i, j)} * v[j]) % m.modulus();
    out[i] = static_cast<Residue>(acc);
  }
  return out;
}

}  // namespace ttperm
