#include "ttperm/rep/perm_complex.hpp"

#include <sstream>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

unsigned exponent_of_size(const CyclicGroup& g, std::size_t size) {
  unsigned e = 0;
  while (size > 1) {
    if (size % g.p != 0) throw InvariantViolation("orbit size is not a power of p");
    size /= g.p;
    ++e;
  }
  if (e > g.n) throw InvariantViolation("orbit larger than the group");
  return g.n - e;
}

detail::Graded<MatrixFp> empty_graded(const CyclicGroup& g) {
  return detail::make_graded(MatrixFp(g.p, 0, 0), 0, -1);
}

}  // namespace

PermComplex::PermComplex(CyclicGroup g) : group_(g), data_(empty_graded(g)) {}

PermComplex::PermComplex(CyclicGroup g, int lo, std::vector<PermModule> modules,
                         std::vector<MatrixFp> differentials)
    : group_(g), data_(empty_graded(g)) {
  if (modules.empty()) {
    if (!differentials.empty()) throw InvariantViolation("PermComplex: differentials without modules");
    return;
  }
  if (differentials.size() + 1 != modules.size())
    throw InvariantViolation("PermComplex: expected " + std::to_string(modules.size() - 1) +
                             " differentials, got " + std::to_string(differentials.size()));
  data_ = detail::make_graded(MatrixFp(g.p, 0, 0), lo, lo + static_cast<int>(modules.size()) - 1);
  for (std::size_t k = 0; k < modules.size(); ++k) {
    if (!(modules[k].group == g)) throw InvalidArgument("PermComplex: module over a different group");
    data_.sizes[k] = modules[k].orbit_sizes();
  }
  data_.diffs[0] = MatrixFp(g.p, 0, data_.dim(lo));
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    if (differentials[k].modulus() != g.p)
      throw InvariantViolation("PermComplex: differential over the wrong field");
    data_.diffs[k + 1] = std::move(differentials[k]);
  }
  data_.check();
  data_.trim();
}

PermComplex PermComplex::concentrated(const PermModule& m, int degree) {
  return PermComplex(m.group, degree, {m}, {});
}

PermComplex PermComplex::unit(const CyclicGroup& g) { return concentrated(trivial_module(g), 0); }

PermComplex PermComplex::from_graded(const CyclicGroup& g, detail::Graded<MatrixFp> data) {
  PermComplex c(g);
  data.check();
  data.trim();
  for (const auto& s : data.sizes)
    for (auto u : s) (void)exponent_of_size(g, u);
  c.data_ = std::move(data);
  return c;
}

bool PermComplex::is_zero() const { return data_.empty(); }

PermModule PermComplex::module(int d) const {
  std::vector<unsigned> orbits;
  for (auto u : data_.orbit_sizes(d)) orbits.push_back(exponent_of_size(group_, u));
  return PermModule(group_, std::move(orbits));
}

std::size_t PermComplex::total_dim() const {
  std::size_t t = 0;
  for (int d = lo(); d <= hi(); ++d) t += dim(d);
  return t;
}

std::string PermComplex::to_string() const {
  std::ostringstream os;
  os << "complex over " << group_.to_string();
  if (is_zero()) return os.str() + ": 0";
  for (int d = hi(); d >= lo(); --d) os << "\n  [" << d << "] " << module(d).to_string();
  return os.str();
}

bool operator==(const PermComplex& a, const PermComplex& b) {
  return a.group_ == b.group_ && a.data_.lo == b.data_.lo && a.data_.sizes == b.data_.sizes &&
         a.data_.diffs == b.data_.diffs;
}

ChainMap::ChainMap(PermComplex source, PermComplex target, std::vector<MatrixFp> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!(source_.group() == target_.group())) throw InvalidArgument("ChainMap: group mismatch");
  const auto& s = source_.graded();
  const auto& t = target_.graded();
  const std::size_t expected = s.empty() ? 0 : s.sizes.size();
  if (components_.size() != expected)
    throw InvariantViolation("ChainMap: expected " + std::to_string(expected) + " components");
  for (int d = s.lo; !s.empty() && d <= s.hi(); ++d) {
    const MatrixFp& f = components_[d - s.lo];
    if (f.rows() != t.dim(d) || f.cols() != s.dim(d))
      throw InvariantViolation("ChainMap: component " + std::to_string(d) + " has the wrong shape");
    if (!is_equivariant_matrix(f, t.orbit_sizes(d), s.orbit_sizes(d)))
      throw InvariantViolation("ChainMap: component " + std::to_string(d) + " is not equivariant");
  }
  // d f_d = f_{d-1} d over the union of ranges
  for (int d = s.lo; !s.empty() && d <= s.hi() + 1; ++d) {
    const MatrixFp lhs = t.differential(d) * component(d);
    const MatrixFp rhs = component(d - 1) * s.differential(d);
    if (!(lhs == rhs))
      throw InvariantViolation("ChainMap: does not commute with differentials in degree " +
                               std::to_string(d));
  }
}

ChainMap ChainMap::identity(const PermComplex& c) {
  std::vector<MatrixFp> f;
  for (int d = c.lo(); !c.is_zero() && d <= c.hi(); ++d)
    f.push_back(MatrixFp::identity(c.group().p, c.dim(d)));
  return ChainMap(c, c, std::move(f));
}

ChainMap ChainMap::zero(const PermComplex& source, const PermComplex& target) {
  std::vector<MatrixFp> f;
  for (int d = source.lo(); !source.is_zero() && d <= source.hi(); ++d)
    f.emplace_back(source.group().p, target.dim(d), source.dim(d));
  return ChainMap(source, target, std::move(f));
}

MatrixFp ChainMap::component(int d) const {
  if (!source_.is_zero() && d >= source_.lo() && d <= source_.hi())
    return components_[d - source_.lo()];
  return MatrixFp(source_.group().p, target_.dim(d), source_.dim(d));
}

}  // namespace ttperm
