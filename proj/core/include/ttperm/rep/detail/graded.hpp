#pragma once

// Coefficient-generic bounded complexes of permutation modules over a cyclic
// group, with modules recorded by orbit sizes. PermComplex (over F_p) and
// IntegralPermComplex (over Z) are thin typed wrappers around Graded<Matrix>.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ttperm/error.hpp"
#include "ttperm/rep/detail/orbit_layout.hpp"
#include "ttperm/rep/perm_module.hpp"

namespace ttperm::detail {

template <class Matrix>
struct Graded {
  Matrix proto;  // 0x0 matrix carrying the coefficient ring
  int lo = 0;
  std::vector<std::vector<std::size_t>> sizes;  // sizes[k]: orbit sizes in degree lo+k
  std::vector<Matrix> diffs;                     // diffs[k]: degree lo+k -> lo+k-1

  bool empty() const { return sizes.empty(); }
  int hi() const { return lo + static_cast<int>(sizes.size()) - 1; }
  bool in_range(int d) const { return !empty() && d >= lo && d <= hi(); }

  const std::vector<std::size_t>& orbit_sizes(int d) const {
    static const std::vector<std::size_t> none;
    return in_range(d) ? sizes[d - lo] : none;
  }
  std::size_t dim(int d) const { return total(orbit_sizes(d)); }

  Matrix differential(int d) const {
    if (in_range(d)) return diffs[d - lo];
    return proto.zeros_like(dim(d - 1), dim(d));
  }

  void check() const {
    if (diffs.size() != sizes.size()) throw InvariantViolation("complex: differential count mismatch");
    for (int d = lo; !empty() && d <= hi(); ++d) {
      const Matrix& m = diffs[d - lo];
      if (m.rows() != dim(d - 1) || m.cols() != dim(d))
        throw InvariantViolation("complex: differential d_" + std::to_string(d) + " has shape " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 ", expected " + std::to_string(dim(d - 1)) + "x" +
                                 std::to_string(dim(d)));
      if (!is_equivariant_matrix(m, orbit_sizes(d - 1), orbit_sizes(d)))
        throw InvariantViolation("complex: differential d_" + std::to_string(d) +
                                 " is not equivariant");
      if (d > lo && !(diffs[d - lo - 1] * m).is_zero())
        throw InvariantViolation("complex: d_" + std::to_string(d - 1) + " o d_" +
                                 std::to_string(d) + " != 0");
    }
  }

  // Drops zero modules at both ends.
  void trim() {
    std::size_t first = 0, last = sizes.size();
    auto zero = [&](std::size_t k) { return total(sizes[k]) == 0; };
    while (first < last && zero(first)) ++first;
    while (last > first && zero(last - 1)) --last;
    if (first == last) {
      sizes.clear();
      diffs.clear();
      lo = 0;
      return;
    }
    if (first > 0) diffs[first] = proto.zeros_like(0, total(sizes[first]));
    sizes = {sizes.begin() + first, sizes.begin() + last};
    diffs = {diffs.begin() + first, diffs.begin() + last};
    lo += static_cast<int>(first);
  }
};

template <class Matrix>
Graded<Matrix> make_graded(const Matrix& proto, int lo, int hi) {
  Graded<Matrix> g{proto.zeros_like(0, 0), lo, {}, {}};
  if (hi < lo) {
    g.lo = 0;
    return g;
  }
  g.sizes.resize(hi - lo + 1);
  g.diffs.assign(hi - lo + 1, proto.zeros_like(0, 0));
  return g;
}

// Shape the differentials once sizes are final.
template <class Matrix>
void allocate_differentials(Graded<Matrix>& g) {
  for (int d = g.lo; !g.empty() && d <= g.hi(); ++d)
    g.diffs[d - g.lo] = g.proto.zeros_like(g.dim(d - 1), g.dim(d));
}

template <class Matrix>
Graded<Matrix> shift(const Graded<Matrix>& a, int k) {
  Graded<Matrix> out = a;
  if (out.empty()) return out;
  out.lo += k;
  if (k % 2 != 0)
    for (auto& m : out.diffs) {
      Matrix neg = m.zeros_like(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!m.is_zero_scalar(m(i, j))) neg.set(i, j, m.neg(m(i, j)));
      m = std::move(neg);
    }
  return out;
}

template <class Matrix>
void copy_block(Matrix& dst, const Matrix& src, std::size_t row_off, std::size_t col_off,
                bool negate = false) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (!src.is_zero_scalar(src(i, j)))
        dst.set(row_off + i, col_off + j, negate ? src.neg(src(i, j)) : src(i, j));
}

template <class Matrix>
Graded<Matrix> direct_sum(const Graded<Matrix>& a, const Graded<Matrix>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto out = make_graded(a.proto, std::min(a.lo, b.lo), std::max(a.hi(), b.hi()));
  for (int d = out.lo; d <= out.hi(); ++d) {
    auto& s = out.sizes[d - out.lo];
    s = a.orbit_sizes(d);
    const auto& sb = b.orbit_sizes(d);
    s.insert(s.end(), sb.begin(), sb.end());
  }
  allocate_differentials(out);
  for (int d = out.lo; d <= out.hi(); ++d) {
    auto& m = out.diffs[d - out.lo];
    copy_block(m, a.differential(d), 0, 0);
    copy_block(m, b.differential(d), a.dim(d - 1), a.dim(d));
  }
  return out;
}

// Total complex of a (x) b with differential d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
template <class Matrix>
Graded<Matrix> tensor(const Graded<Matrix>& a, const Graded<Matrix>& b) {
  if (a.empty() || b.empty()) return make_graded(a.proto, 0, -1);
  auto out = make_graded(a.proto, a.lo + b.lo, a.hi() + b.hi());

  // block (i, j) with i + j = d sits in degree d at block_offset
  struct Block {
    TensorLayout layout;
    std::size_t offset = 0;
  };
  const int na = a.hi() - a.lo + 1, nb = b.hi() - b.lo + 1;
  std::vector<Block> blocks(static_cast<std::size_t>(na * nb));
  auto block = [&](int i, int j) -> Block& { return blocks[(i - a.lo) * nb + (j - b.lo)]; };
  for (int d = out.lo; d <= out.hi(); ++d) {
    std::size_t off = 0;
    auto& s = out.sizes[d - out.lo];
    for (int i = a.lo; i <= a.hi(); ++i) {
      const int j = d - i;
      if (j < b.lo || j > b.hi()) continue;
      Block& bl = block(i, j);
      bl.layout = tensor_layout(a.orbit_sizes(i), b.orbit_sizes(j));
      bl.offset = off;
      off += total(bl.layout.sizes);
      s.insert(s.end(), bl.layout.sizes.begin(), bl.layout.sizes.end());
    }
  }
  allocate_differentials(out);

  for (int i = a.lo; i <= a.hi(); ++i)
    for (int j = b.lo; j <= b.hi(); ++j) {
      const int d = i + j;
      Matrix& m = out.diffs[d - out.lo];
      const Block& src = block(i, j);
      const std::size_t dim_bj = b.dim(j);
      if (i > a.lo) {
        const Block& dst = block(i - 1, j);
        const Matrix da = a.differential(i);
        for (std::size_t x = 0; x < da.cols(); ++x)
          for (std::size_t xp = 0; xp < da.rows(); ++xp) {
            const auto& v = da(xp, x);
            if (da.is_zero_scalar(v)) continue;
            for (std::size_t y = 0; y < dim_bj; ++y)
              m.add_to(dst.offset + dst.layout.position[xp * dim_bj + y],
                       src.offset + src.layout.position[x * dim_bj + y], v);
          }
      }
      if (j > b.lo) {
        const Block& dst = block(i, j - 1);
        const Matrix db = b.differential(j);
        const std::size_t dim_bj1 = b.dim(j - 1);
        const bool odd = ((i % 2) + 2) % 2 == 1;
        for (std::size_t y = 0; y < db.cols(); ++y)
          for (std::size_t yp = 0; yp < db.rows(); ++yp) {
            const auto& v = db(yp, y);
            if (db.is_zero_scalar(v)) continue;
            const auto sv = odd ? db.neg(v) : v;
            for (std::size_t x = 0; x < a.dim(i); ++x)
              m.add_to(dst.offset + dst.layout.position[x * dim_bj1 + yp],
                       src.offset + src.layout.position[x * dim_bj + y], sv);
          }
      }
    }
  return out;
}

template <class Matrix>
Graded<Matrix> restrict_to_step(const Graded<Matrix>& a, std::size_t step) {
  Graded<Matrix> out = a;
  std::vector<RestrictLayout> layouts;
  for (int d = a.lo; !a.empty() && d <= a.hi(); ++d) {
    layouts.push_back(restrict_layout(a.orbit_sizes(d), step));
    out.sizes[d - a.lo] = layouts.back().sizes;
  }
  for (int d = a.lo; !a.empty() && d <= a.hi(); ++d) {
    const std::vector<std::size_t> none;
    const auto& rows = d > a.lo ? layouts[d - a.lo - 1].old_to_new : none;
    out.diffs[d - a.lo] = permute(a.diffs[d - a.lo], rows, layouts[d - a.lo].old_to_new);
  }
  return out;
}

template <class Matrix>
Graded<Matrix> fixed_by_step(const Graded<Matrix>& a, std::size_t step) {
  Graded<Matrix> out = a;
  std::vector<std::vector<std::size_t>> keep;
  for (int d = a.lo; !a.empty() && d <= a.hi(); ++d) {
    keep.push_back(fixed_indices(a.orbit_sizes(d), step));
    auto& s = out.sizes[d - a.lo];
    s.erase(std::remove_if(s.begin(), s.end(), [&](std::size_t u) { return step % u != 0; }),
            s.end());
  }
  for (int d = a.lo; !a.empty() && d <= a.hi(); ++d) {
    const std::vector<std::size_t> none;
    const auto& rows = d > a.lo ? keep[d - a.lo - 1] : none;
    out.diffs[d - a.lo] = a.diffs[d - a.lo].submatrix(rows, keep[d - a.lo]);
  }
  return out;
}

// Mapping cone of f: a -> b, with cone_d = b_d (+) a_{d-1} and differential
// [[d_b, f], [0, -d_a]]. maps[d - a.lo] is f_d for d in a's range.
template <class Matrix>
Graded<Matrix> cone(const Graded<Matrix>& a, const Graded<Matrix>& b,
                    const std::vector<Matrix>& maps) {
  const int lo = std::min(b.empty() ? a.lo + 1 : b.lo, a.empty() ? b.lo : a.lo + 1);
  const int hi = std::max(b.empty() ? a.hi() + 1 : b.hi(), a.empty() ? b.hi() : a.hi() + 1);
  if (a.empty() && b.empty()) return make_graded(a.proto, 0, -1);
  auto out = make_graded(a.proto, lo, hi);
  for (int d = lo; d <= hi; ++d) {
    auto& s = out.sizes[d - lo];
    s = b.orbit_sizes(d);
    const auto& sa = a.orbit_sizes(d - 1);
    s.insert(s.end(), sa.begin(), sa.end());
  }
  allocate_differentials(out);
  for (int d = lo; d <= hi; ++d) {
    Matrix& m = out.diffs[d - lo];
    copy_block(m, b.differential(d), 0, 0);
    if (a.in_range(d - 1)) copy_block(m, maps[d - 1 - a.lo], 0, b.dim(d));
    copy_block(m, a.differential(d - 1), b.dim(d - 1), b.dim(d), true);
  }
  return out;
}

}  // namespace ttperm::detail
