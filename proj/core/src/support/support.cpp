#include "ttperm/support/support.hpp"

#include "ttperm/error.hpp"
#include "ttperm/rep/functors.hpp"
#include "ttperm/rep/koszul.hpp"

namespace ttperm {

std::string WPoint::label() const {
  return (kind == PointKind::M ? "m" : "p") + std::to_string(index);
}

void WPoint::validate() const {
  const bool ok = kind == PointKind::M ? index <= level : (index >= 1 && index <= level);
  if (!ok) throw InvalidArgument("point " + label() + " does not exist at level " + std::to_string(level));
}

WPoint point_m(unsigned i, unsigned level) {
  WPoint x{PointKind::M, i, level};
  x.validate();
  return x;
}

WPoint point_p(unsigned j, unsigned level) {
  WPoint x{PointKind::P, j, level};
  x.validate();
  return x;
}

WPoint point_at(std::size_t position, unsigned level) {
  if (position > 2 * level) throw InvalidArgument("point position out of range");
  return position % 2 == 0 ? point_m(static_cast<unsigned>(position / 2), level)
                           : point_p(static_cast<unsigned>(position / 2 + 1), level);
}

std::vector<WPoint> points_of_level(unsigned level) {
  std::vector<WPoint> out;
  for (std::size_t k = 0; k <= 2 * level; ++k) out.push_back(point_at(k, level));
  return out;
}

SupportSet SupportSet::full(unsigned level) {
  SupportSet s(level);
  s.bits_.assign(2 * level + 1, true);
  return s;
}

SupportSet SupportSet::from_bits(unsigned level, std::vector<bool> bits) {
  if (bits.size() != 2 * level + 1) throw InvalidArgument("SupportSet: wrong number of bits");
  SupportSet s(level);
  s.bits_ = std::move(bits);
  return s;
}

bool SupportSet::contains(const WPoint& x) const {
  if (x.level != level_) throw InvalidArgument("SupportSet: point from another level");
  return bits_[x.position()];
}

void SupportSet::insert(const WPoint& x) {
  if (x.level != level_) throw InvalidArgument("SupportSet: point from another level");
  bits_[x.position()] = true;
}

void SupportSet::erase(const WPoint& x) {
  if (x.level != level_) throw InvalidArgument("SupportSet: point from another level");
  bits_[x.position()] = false;
}

bool SupportSet::empty() const { return size() == 0; }

std::size_t SupportSet::size() const {
  std::size_t n = 0;
  for (bool b : bits_) n += b;
  return n;
}

std::vector<WPoint> SupportSet::points() const {
  std::vector<WPoint> out;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) out.push_back(point_at(k, level_));
  return out;
}

bool SupportSet::is_specialization_closed() const {
  for (std::size_t k = 1; k < bits_.size(); k += 2)
    if (bits_[k] && !(bits_[k - 1] && bits_[k + 1])) return false;
  return true;
}

SupportSet SupportSet::operator|(const SupportSet& o) const {
  if (o.level_ != level_) throw InvalidArgument("SupportSet: level mismatch");
  SupportSet s(level_);
  for (std::size_t k = 0; k < bits_.size(); ++k) s.bits_[k] = bits_[k] || o.bits_[k];
  return s;
}

SupportSet SupportSet::operator&(const SupportSet& o) const {
  if (o.level_ != level_) throw InvalidArgument("SupportSet: level mismatch");
  SupportSet s(level_);
  for (std::size_t k = 0; k < bits_.size(); ++k) s.bits_[k] = bits_[k] && o.bits_[k];
  return s;
}

bool SupportSet::subset_of(const SupportSet& o) const { return (*this & o) == *this; }

std::string SupportSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& x : points()) {
    if (!first) out += ",";
    out += x.label();
    first = false;
  }
  return out + "}";
}

namespace {

// y = g - 1 and the norm N = 1 + g + ... + g^{p-1} acting on a kC_p-module.
MatrixFp tate_y(const PermModule& m) {
  return m.generator_action() - MatrixFp::identity(m.group.p, m.dim());
}

MatrixFp tate_norm(const PermModule& m) {
  const MatrixFp g = m.generator_action();
  MatrixFp power = MatrixFp::identity(m.group.p, m.dim());
  MatrixFp sum(m.group.p, m.dim(), m.dim());
  for (std::uint32_t k = 0; k < m.group.p; ++k) {
    sum = sum + power;
    power = power * g;
  }
  return sum;
}

// Differential Tot^i -> Tot^{i+1} of the double complex with entries
// Hom(P_a, C_b) = C_b in degree a - b. Horizontally the complete resolution
// has y in odd and N in even degrees; vertically (-1)^a d_C.
MatrixFp tate_differential(const PermComplex& c, int i) {
  const std::uint32_t p = c.group().p;
  std::vector<std::size_t> src_off{0}, dst_off{0};
  for (int b = c.lo(); b <= c.hi(); ++b) {
    src_off.push_back(src_off.back() + c.dim(b));
    dst_off.push_back(dst_off.back() + c.dim(b));
  }
  MatrixFp out(p, dst_off.back(), src_off.back());
  for (int b = c.lo(); b <= c.hi(); ++b) {
    const int a = i + b;
    const std::size_t k = b - c.lo();
    const PermModule mod = c.module(b);
    const MatrixFp h = ((a + 1) % 2 != 0) ? tate_y(mod) : tate_norm(mod);
    detail::copy_block(out, h, dst_off[k], src_off[k]);
    if (b > c.lo()) {
      const bool odd = (a % 2) != 0;
      detail::copy_block(out, c.differential(b), dst_off[k - 1], src_off[k], odd);
    }
  }
  return out;
}

}  // namespace

std::size_t tate_cohomology(const PermComplex& c, int i) {
  if (c.group().n > 1) throw InvalidArgument("tate_cohomology: expects a complex over C_p");
  if (c.group().n == 0 || c.is_zero()) return 0;
  const std::size_t tot = c.total_dim();
  return tot - rank_mod_p(tate_differential(c, i)) - rank_mod_p(tate_differential(c, i - 1));
}

bool is_stably_zero(const PermComplex& c) {
  return tate_cohomology(c, 0) == 0 && tate_cohomology(c, 1) == 0;
}

bool residue_at_m(const PermComplex& c, unsigned i) {
  const unsigned n = c.group().n;
  point_m(i, n);
  return !is_acyclic(underlying(brauer_fixed_points(c, Subgroup{n - i})));
}

bool residue_at_p(const PermComplex& c, unsigned j) {
  const unsigned n = c.group().n;
  point_p(j, n);
  // K = H_{j-1} = C_{p^{n-j+1}} and S = H_j = C_{p^{n-j}}, index p inside K
  const PermComplex res = restrict(c, Subgroup{n - j + 1});
  return !is_stably_zero(brauer_fixed_points(res, Subgroup{n - j}));
}

SupportSet support(const PermComplex& c) {
  const unsigned n = c.group().n;
  SupportSet s(n);
  for (const auto& x : points_of_level(n))
    if (x.kind == PointKind::M ? residue_at_m(c, x.index) : residue_at_p(c, x.index)) s.insert(x);
  if (!s.is_specialization_closed())
    throw InvariantViolation("support " + s.to_string() + " is not specialization-closed");
  return s;
}

bool in_prime(const PermComplex& c, const WPoint& x) {
  if (x.level != c.group().n) throw InvalidArgument("in_prime: point from another level");
  return !support(c).contains(x);
}

namespace {

// Whether the S-fixed part of s_K^G is small enough to build.
bool fixed_part_is_dense(const CyclicGroup& g, Subgroup k, Subgroup s) {
  return koszul_fixed_basis_size(g, k, s) <= kDefaultKoszulBudget;
}

}  // namespace

bool koszul_residue_at_m(const CyclicGroup& g, Subgroup k, unsigned i) {
  require_subgroup(g, k, "koszul_residue_at_m");
  point_m(i, g.n);
  const Subgroup h{g.n - i};
  if (h.s <= k.s && !fixed_part_is_dense(g, k, h)) return false;  // acyclic by Kunneth
  return !is_acyclic(underlying(koszul_fixed_points(g, k, h)));
}

bool koszul_residue_at_p(const CyclicGroup& g, Subgroup k, unsigned j) {
  require_subgroup(g, k, "koszul_residue_at_p");
  point_p(j, g.n);
  const Subgroup s{g.n - j};
  if (s.s <= k.s && !fixed_part_is_dense(g, k, s)) return false;  // acyclic, hence perfect
  // fixed points commute with restriction: Psi^S Res_K' = Res_{K'/S} Psi^S
  const PermComplex fixed = koszul_fixed_points(g, k, s);
  return !is_stably_zero(restrict(fixed, Subgroup{1}));
}

SupportSet koszul_support(const CyclicGroup& g, Subgroup k) {
  SupportSet s(g.n);
  for (const auto& x : points_of_level(g.n))
    if (x.kind == PointKind::M ? koszul_residue_at_m(g, k, x.index)
                               : koszul_residue_at_p(g, k, x.index))
      s.insert(x);
  if (!s.is_specialization_closed())
    throw InvariantViolation("koszul support " + s.to_string() + " is not specialization-closed");
  return s;
}

}  // namespace ttperm
