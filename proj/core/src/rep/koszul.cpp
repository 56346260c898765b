#include "ttperm/rep/koszul.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

using Mask = std::uint64_t;

struct Setup {
  std::size_t m = 0;      // [G:K]
  std::size_t block = 0;  // period imposed by S on G/K
  unsigned quotient_level = 0;
};

Setup setup(const CyclicGroup& g, Subgroup k, Subgroup s) {
  require_subgroup(g, k, "koszul");
  require_subgroup(g, s, "koszul");
  Setup st;
  st.m = ipow(g.p, g.n - k.s);
  // image of S in G/K has order p^{max(0, s - k)}
  const unsigned img = s.s > k.s ? s.s - k.s : 0;
  st.block = st.m / ipow(g.p, img);
  st.quotient_level = g.n - s.s;
  return st;
}

Mask rotate(Mask t, std::size_t m) {
  const Mask top = Mask{1} << (m - 1);
  const Mask full = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  return ((t << 1) & full) | ((t & top) ? 1 : 0);
}

// sign of g acting on e_t
int rotation_sign(Mask t, std::size_t m) {
  if (!(t >> (m - 1) & 1)) return 1;
  return (std::popcount(t) - 1) % 2 == 0 ? 1 : -1;
}

}  // namespace

std::size_t koszul_fixed_basis_size(const CyclicGroup& g, Subgroup k, Subgroup s) {
  const Setup st = setup(g, k, s);
  if (st.block >= 63) return std::size_t(-1);
  return std::size_t{1} << st.block;
}

PermComplex koszul_fixed_points(const CyclicGroup& g, Subgroup k, Subgroup s, std::size_t budget) {
  const Setup st = setup(g, k, s);
  if (st.m > 64) throw SizeLimitExceeded("koszul: index " + std::to_string(st.m) + " exceeds 64");
  const std::size_t count = koszul_fixed_basis_size(g, k, s);
  if (count > budget)
    throw SizeLimitExceeded("koszul: " + std::to_string(count) + " basis subsets exceed budget " +
                            std::to_string(budget));
  const std::size_t m = st.m;

  // All S-invariant subsets, ascending as masks.
  std::vector<Mask> sets;
  sets.reserve(count);
  for (Mask a = 0; a < (Mask{1} << st.block); ++a) {
    Mask t = 0;
    for (std::size_t x = 0; x < m; ++x)
      if (a >> (x % st.block) & 1) t |= Mask{1} << x;
    sets.push_back(t);
  }
  std::sort(sets.begin(), sets.end());

  // Orbits in each degree, with sign sigma_T such that f = sigma_T e_T.
  struct Slot {
    int degree = 0;
    std::size_t index = 0;
    int sign = 1;
  };
  std::unordered_map<Mask, Slot> where;
  std::vector<std::vector<std::size_t>> sizes(m + 1);
  std::vector<std::size_t> next(m + 1, 0);
  for (Mask rep : sets) {
    if (where.count(rep)) continue;
    const int d = std::popcount(rep);
    Mask t = rep;
    int sign = 1;
    std::size_t u = 0;
    do {
      where[t] = Slot{d, next[d] + u, sign};
      sign *= rotation_sign(t, m);
      t = rotate(t, m);
      ++u;
    } while (t != rep);
    if (sign != 1 && g.p != 2)
      throw InvariantViolation("koszul: nontrivial orbit sign for odd p");
    sizes[d].push_back(u);
    next[d] += u;
  }

  auto data = detail::make_graded(MatrixFp(g.p, 0, 0), 0, static_cast<int>(m));
  for (std::size_t d = 0; d <= m; ++d) data.sizes[d] = sizes[d];
  detail::allocate_differentials(data);
  for (Mask t : sets) {
    const Slot& col = where[t];
    if (col.degree == 0) continue;
    auto& mat = data.diffs[col.degree];
    int r = 0;
    for (Mask rest = t; rest; rest &= rest - 1) {
      const Mask tp = t & ~(rest & (~rest + 1));
      const int koszul_sign = r % 2 == 0 ? 1 : -1;
      ++r;
      auto it = where.find(tp);
      if (it == where.end()) continue;  // not fixed: drops out of the Brauer quotient
      const int e = col.sign * it->second.sign * koszul_sign;
      mat.add_to(it->second.index, col.index, mat.from_int(e));
    }
  }
  return PermComplex::from_graded(CyclicGroup(g.p, st.quotient_level), std::move(data));
}

PermComplex koszul(const CyclicGroup& g, Subgroup k, std::size_t budget) {
  return koszul_fixed_points(g, k, Subgroup{0}, budget);
}

}  // namespace ttperm
