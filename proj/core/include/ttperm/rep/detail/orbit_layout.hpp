#pragma once

// Basis bookkeeping for permutation modules over a cyclic group C_N, in terms
// of orbit sizes only. An orbit of size u is the coset set Z/u with the
// generator acting by +1. Shared by the mod-p and integral layers.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ttperm::detail {

inline std::size_t total(const std::vector<std::size_t>& sizes) {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

inline std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t t = 0; t < sizes.size(); ++t) off[t + 1] = off[t] + sizes[t];
  return off;
}

// Orbit decomposition of A (x) B. Orbits (ta, tb) of sizes u, v split into
// gcd(u, v) orbits of size lcm(u, v), ordered by (ta, tb, r); the orbit with
// label r consists of the pairs (k mod u, r + k mod v), k ascending.
struct TensorLayout {
  std::vector<std::size_t> sizes;
  // position[i * dim_b + j] = index of e_i (x) f_j in the tensor basis
  std::vector<std::size_t> position;
  // orbit_origin[o] = (ta, tb) that orbit o of the result comes from
  std::vector<std::pair<std::size_t, std::size_t>> orbit_origin;
};

inline TensorLayout tensor_layout(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  TensorLayout out;
  const auto off_a = offsets_of(a), off_b = offsets_of(b);
  const std::size_t dim_b = off_b.back();
  out.position.assign(off_a.back() * dim_b, 0);
  std::size_t next = 0;
  for (std::size_t ta = 0; ta < a.size(); ++ta)
    for (std::size_t tb = 0; tb < b.size(); ++tb) {
      const std::size_t u = a[ta], v = b[tb];
      const std::size_t g = std::gcd(u, v), l = std::lcm(u, v);
      for (std::size_t r = 0; r < g; ++r) {
        for (std::size_t k = 0; k < l; ++k) {
          const std::size_t i = off_a[ta] + k % u;
          const std::size_t j = off_b[tb] + (r + k) % v;
          out.position[i * dim_b + j] = next + k;
        }
        out.sizes.push_back(l);
        out.orbit_origin.emplace_back(ta, tb);
        next += l;
      }
    }
  return out;
}

// Restriction to the subgroup generated by g^step (step divides N). An orbit
// of size u splits into gcd(u, step) orbits of size u / gcd(u, step); the new
// basis element (r, k) is the old coset r + k * step (mod u).
struct RestrictLayout {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> old_to_new;
};

inline RestrictLayout restrict_layout(const std::vector<std::size_t>& sizes, std::size_t step) {
  RestrictLayout out;
  const auto off = offsets_of(sizes);
  out.old_to_new.assign(off.back(), 0);
  std::size_t next = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    const std::size_t u = sizes[t];
    const std::size_t g = std::gcd(u, step), len = u / g;
    for (std::size_t r = 0; r < g; ++r) {
      for (std::size_t k = 0; k < len; ++k) out.old_to_new[off[t] + (r + k * step) % u] = next + k;
      out.sizes.push_back(len);
      next += len;
    }
  }
  return out;
}

// Basis elements fixed by the subgroup generated by g^step: whole orbits
// whose size divides step.
inline std::vector<std::size_t> fixed_indices(const std::vector<std::size_t>& sizes,
                                              std::size_t step) {
  std::vector<std::size_t> keep;
  const auto off = offsets_of(sizes);
  for (std::size_t t = 0; t < sizes.size(); ++t)
    if (step % sizes[t] == 0)
      for (std::size_t c = 0; c < sizes[t]; ++c) keep.push_back(off[t] + c);
  return keep;
}

template <class Matrix>
Matrix permute(const Matrix& m, const std::vector<std::size_t>& row_to,
               const std::vector<std::size_t>& col_to) {
  Matrix out = m.zeros_like(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.is_zero_scalar(m(i, j))) out.set(row_to[i], col_to[j], m(i, j));
  return out;
}

}  // namespace ttperm::detail
