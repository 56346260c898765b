#include "ttperm/rep/functors.hpp"

#include "ttperm/error.hpp"
#include "ttperm/rep/detail/orbit_layout.hpp"

namespace ttperm {
namespace {

void same_group(const CyclicGroup& a, const CyclicGroup& b, const char* where) {
  if (!(a == b))
    throw InvalidArgument(std::string(where) + ": group mismatch (" + a.to_string() + " vs " +
                          b.to_string() + ")");
}

}  // namespace

TensorProduct tensor(const PermModule& m, const PermModule& n) {
  same_group(m.group, n.group, "tensor");
  const auto layout = detail::tensor_layout(m.orbit_sizes(), n.orbit_sizes());
  // Orbit (ta, tb) of sizes p^{n-s}, p^{n-s'} yields orbits of exponent min(s, s').
  std::vector<unsigned> orbits;
  for (auto [ta, tb] : layout.orbit_origin) orbits.push_back(std::min(m.orbits[ta], n.orbits[tb]));
  return {PermModule(m.group, std::move(orbits)), layout.position};
}

PermComplex tensor_complexes(const PermComplex& c, const PermComplex& d) {
  same_group(c.group(), d.group(), "tensor_complexes");
  return PermComplex::from_graded(c.group(), detail::tensor(c.graded(), d.graded()));
}

PermComplex direct_sum(const PermComplex& c, const PermComplex& d) {
  same_group(c.group(), d.group(), "direct_sum");
  return PermComplex::from_graded(c.group(), detail::direct_sum(c.graded(), d.graded()));
}

PermComplex shift(const PermComplex& c, int k) {
  return PermComplex::from_graded(c.group(), detail::shift(c.graded(), k));
}

PermComplex cone(const ChainMap& f) {
  return PermComplex::from_graded(
      f.source().group(), detail::cone(f.source().graded(), f.target().graded(), f.components()));
}

PermComplex restrict(const PermComplex& c, Subgroup h) {
  const CyclicGroup& g = c.group();
  require_subgroup(g, h, "restrict");
  const std::size_t step = ipow(g.p, g.n - h.s);
  return PermComplex::from_graded(CyclicGroup(g.p, h.s), detail::restrict_to_step(c.graded(), step));
}

PermComplex underlying(const PermComplex& c) { return restrict(c, Subgroup{0}); }

PermComplex inflate(const PermComplex& c, unsigned level) {
  if (level < c.group().n)
    throw InvalidArgument("inflate: target level " + std::to_string(level) + " below source level " +
                          std::to_string(c.group().n));
  return PermComplex::from_graded(CyclicGroup(c.group().p, level), c.graded());
}

PermComplex brauer_fixed_points(const PermComplex& c, Subgroup nsub) {
  const CyclicGroup& g = c.group();
  require_subgroup(g, nsub, "brauer_fixed_points");
  // N = C_{p^s} is generated by g^{p^{n-s}}; a coset is N-fixed iff its orbit
  // size divides p^{n-s}.
  const std::size_t step = ipow(g.p, g.n - nsub.s);
  return PermComplex::from_graded(CyclicGroup(g.p, g.n - nsub.s),
                                  detail::fixed_by_step(c.graded(), step));
}

std::vector<std::pair<int, std::size_t>> homology(const PermComplex& c) {
  std::vector<std::pair<int, std::size_t>> out;
  if (c.is_zero()) return out;
  std::vector<std::size_t> ranks;  // ranks[k] = rank d_{lo+k}, plus one past hi
  for (int d = c.lo(); d <= c.hi() + 1; ++d) ranks.push_back(rank_mod_p(c.differential(d)));
  for (int d = c.lo(); d <= c.hi(); ++d) {
    const std::size_t k = d - c.lo();
    out.emplace_back(d, c.dim(d) - ranks[k] - ranks[k + 1]);
  }
  return out;
}

bool is_acyclic(const PermComplex& c) {
  for (auto [d, h] : homology(c))
    if (h != 0) return false;
  return true;
}

}  // namespace ttperm
