#pragma once

namespace ttperm {

template <class Matrix>
bool is_equivariant_matrix(const Matrix& m, const std::vector<std::size_t>& codomain_sizes,
                           const std::vector<std::size_t>& domain_sizes) {
  std::size_t rows = 0, cols = 0;
  for (auto u : codomain_sizes) rows += u;
  for (auto u : domain_sizes) cols += u;
  if (m.rows() != rows || m.cols() != cols) return false;
  std::size_t row_off = 0;
  for (auto v : codomain_sizes) {
    std::size_t col_off = 0;
    for (auto u : domain_sizes) {
      for (std::size_t cp = 0; cp < v; ++cp)
        for (std::size_t c = 0; c < u; ++c)
          if (m(row_off + (cp + 1) % v, col_off + (c + 1) % u) != m(row_off + cp, col_off + c))
            return false;
      col_off += u;
    }
    row_off += v;
  }
  return true;
}

}  // namespace ttperm
