#include "ttperm/rep/perm_module.hpp"

#include "ttperm/error.hpp"
#include "ttperm/rep/detail/orbit_layout.hpp"

namespace ttperm {

PermModule::PermModule(CyclicGroup g, std::vector<unsigned> stabilizers)
    : group(g), orbits(std::move(stabilizers)) {
  for (auto s : orbits) require_subgroup(group, Subgroup{s}, "PermModule");
}

std::size_t PermModule::dim() const { return detail::total(orbit_sizes()); }

std::vector<std::size_t> PermModule::orbit_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(orbits.size());
  for (std::size_t t = 0; t < orbits.size(); ++t) out.push_back(orbit_size(t));
  return out;
}

std::vector<std::size_t> PermModule::offsets() const {
  auto off = detail::offsets_of(orbit_sizes());
  off.pop_back();
  return off;
}

MatrixFp PermModule::generator_action() const {
  MatrixFp g(group.p, dim(), dim());
  const auto off = offsets();
  for (std::size_t t = 0; t < orbits.size(); ++t) {
    const std::size_t u = orbit_size(t);
    for (std::size_t c = 0; c < u; ++c) g.set(off[t] + (c + 1) % u, off[t] + c, 1);
  }
  return g;
}

std::string PermModule::to_string() const {
  if (orbits.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < orbits.size(); ++t) {
    if (t) out += " + ";
    out += "k(G/C_" + std::to_string(group.p) + "^" + std::to_string(orbits[t]) + ")";
  }
  return out;
}

PermModule orbit_module(const CyclicGroup& g, Subgroup stabilizer) {
  require_subgroup(g, stabilizer, "orbit_module");
  return PermModule(g, {stabilizer.s});
}

PermModule trivial_module(const CyclicGroup& g) { return PermModule(g, {g.n}); }

PermModule zero_module(const CyclicGroup& g) { return PermModule(g, {}); }

PermModule direct_sum(const PermModule& a, const PermModule& b) {
  if (!(a.group == b.group)) throw InvalidArgument("direct_sum: group mismatch");
  auto orbits = a.orbits;
  orbits.insert(orbits.end(), b.orbits.begin(), b.orbits.end());
  return PermModule(a.group, std::move(orbits));
}

bool EquivariantMap::is_equivariant() const {
  return is_equivariant_matrix(matrix, codomain.orbit_sizes(), domain.orbit_sizes());
}

}  // namespace ttperm
