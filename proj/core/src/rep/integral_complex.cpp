#include "ttperm/rep/integral_complex.hpp"

#include <sstream>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

detail::Graded<MatrixZ> empty_graded() { return detail::make_graded(MatrixZ(0, 0), 0, -1); }

void check_sizes(std::uint64_t order, const detail::Graded<MatrixZ>& g) {
  for (const auto& s : g.sizes)
    for (auto u : s)
      if (u == 0 || order % u != 0)
        throw InvariantViolation("integral complex: orbit size " + std::to_string(u) +
                                 " does not divide " + std::to_string(order));
}

}  // namespace

std::uint64_t p_adic_valuation(std::uint64_t m, std::uint64_t q, std::uint64_t* power) {
  std::uint64_t v = 0, pw = 1;
  while (m % q == 0) {
    m /= q;
    pw *= q;
    ++v;
  }
  if (power) *power = pw;
  return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) out.push_back(m);
  return out;
}

IntegralPermComplex::IntegralPermComplex(std::uint64_t order) : order_(order), data_(empty_graded()) {
  if (order == 0) throw InvalidArgument("IntegralPermComplex: group order must be positive");
}

IntegralPermComplex::IntegralPermComplex(std::uint64_t order, int lo,
                                         std::vector<std::vector<std::uint64_t>> stabilizers,
                                         std::vector<MatrixZ> differentials)
    : IntegralPermComplex(order) {
  if (stabilizers.empty()) {
    if (!differentials.empty())
      throw InvariantViolation("IntegralPermComplex: differentials without modules");
    return;
  }
  if (differentials.size() + 1 != stabilizers.size())
    throw InvariantViolation("IntegralPermComplex: expected " +
                             std::to_string(stabilizers.size() - 1) + " differentials");
  data_ = detail::make_graded(MatrixZ(0, 0), lo, lo + static_cast<int>(stabilizers.size()) - 1);
  for (std::size_t k = 0; k < stabilizers.size(); ++k)
    for (auto d : stabilizers[k]) {
      if (d == 0 || order % d != 0)
        throw InvalidArgument("IntegralPermComplex: stabilizer order " + std::to_string(d) +
                              " does not divide " + std::to_string(order));
      data_.sizes[k].push_back(order / d);
    }
  data_.diffs[0] = MatrixZ(0, data_.dim(lo));
  for (std::size_t k = 0; k < differentials.size(); ++k) data_.diffs[k + 1] = std::move(differentials[k]);
  data_.check();
  data_.trim();
}

IntegralPermComplex IntegralPermComplex::unit(std::uint64_t order) { return orbit(order, order, 0); }

IntegralPermComplex IntegralPermComplex::orbit(std::uint64_t order, std::uint64_t stabilizer,
                                               int degree) {
  return IntegralPermComplex(order, degree, {{stabilizer}}, {});
}

IntegralPermComplex IntegralPermComplex::from_graded(std::uint64_t order,
                                                     detail::Graded<MatrixZ> data) {
  IntegralPermComplex t(order);
  check_sizes(order, data);
  data.check();
  data.trim();
  t.data_ = std::move(data);
  return t;
}

std::vector<std::uint64_t> IntegralPermComplex::stabilizers(int d) const {
  std::vector<std::uint64_t> out;
  for (auto u : data_.orbit_sizes(d)) out.push_back(order_ / u);
  return out;
}

std::string IntegralPermComplex::to_string() const {
  std::ostringstream os;
  os << "integral complex over C_" << order_;
  if (is_zero()) return os.str() + ": 0";
  for (int d = hi(); d >= lo(); --d) {
    os << "\n  [" << d << "]";
    for (auto s : stabilizers(d)) os << " Z(G/C_" << s << ")";
  }
  return os.str();
}

IntegralPermComplex tensor_complexes(const IntegralPermComplex& a, const IntegralPermComplex& b) {
  if (a.order() != b.order()) throw InvalidArgument("tensor_complexes: group order mismatch");
  return IntegralPermComplex::from_graded(a.order(), detail::tensor(a.graded(), b.graded()));
}

IntegralPermComplex direct_sum(const IntegralPermComplex& a, const IntegralPermComplex& b) {
  if (a.order() != b.order()) throw InvalidArgument("direct_sum: group order mismatch");
  return IntegralPermComplex::from_graded(a.order(), detail::direct_sum(a.graded(), b.graded()));
}

IntegralPermComplex shift(const IntegralPermComplex& a, int k) {
  return IntegralPermComplex::from_graded(a.order(), detail::shift(a.graded(), k));
}

IntegralPermComplex cone(const IntegralPermComplex& a, const IntegralPermComplex& b,
                         const std::vector<MatrixZ>& components) {
  if (a.order() != b.order()) throw InvalidArgument("cone: group order mismatch");
  const auto& s = a.graded();
  const auto& t = b.graded();
  if (components.size() != s.sizes.size())
    throw InvariantViolation("cone: wrong number of map components");
  auto comp = [&](int d) {
    return s.in_range(d) ? components[d - s.lo] : MatrixZ(t.dim(d), s.dim(d));
  };
  for (int d = s.lo; !s.empty() && d <= s.hi(); ++d) {
    const auto& f = components[d - s.lo];
    if (f.rows() != t.dim(d) || f.cols() != s.dim(d) ||
        !is_equivariant_matrix(f, t.orbit_sizes(d), s.orbit_sizes(d)))
      throw InvariantViolation("cone: component " + std::to_string(d) + " is not an equivariant map");
  }
  for (int d = s.lo; !s.empty() && d <= s.hi() + 1; ++d)
    if (!(t.differential(d) * comp(d) == comp(d - 1) * s.differential(d)))
      throw InvariantViolation("cone: map does not commute with differentials");
  return IntegralPermComplex::from_graded(a.order(), detail::cone(s, t, components));
}

PermComplex sylow_reduction(const IntegralPermComplex& t, std::uint32_t q) {
  if (!is_prime(q)) throw InvalidArgument("sylow_reduction: " + std::to_string(q) + " is not prime");
  std::uint64_t qv = 1;
  const auto v = p_adic_valuation(t.order(), q, &qv);
  const auto restricted = detail::restrict_to_step(t.graded(), t.order() / qv);
  auto data = detail::make_graded(MatrixFp(q, 0, 0), 0, -1);
  data.lo = restricted.lo;
  data.sizes = restricted.sizes;
  for (const auto& m : restricted.diffs) data.diffs.push_back(m.reduce_mod(q));
  return PermComplex::from_graded(CyclicGroup(q, static_cast<unsigned>(v)), std::move(data));
}

std::vector<std::size_t> rational_betti_numbers(const IntegralPermComplex& t) {
  std::vector<std::size_t> out;
  if (t.is_zero()) return out;
  std::vector<std::size_t> ranks;
  for (int d = t.lo(); d <= t.hi() + 1; ++d) ranks.push_back(rank_over_q(t.differential(d)));
  for (int d = t.lo(); d <= t.hi(); ++d) {
    const std::size_t k = d - t.lo();
    out.push_back(t.dim(d) - ranks[k] - ranks[k + 1]);
  }
  return out;
}

std::vector<std::uint64_t> torsion_primes(const IntegralPermComplex& t) {
  // C_d / ker d_d is torsion-free, so the torsion of H_d is that of coker d_{d+1}.
  std::vector<std::uint64_t> primes;
  for (int d = t.lo() + 1; !t.is_zero() && d <= t.hi(); ++d)
    for (const auto& f : smith_normal_form(t.differential(d))) {
      if (f <= 1) continue;
      if (!f.fits_ulong_p()) throw SizeLimitExceeded("torsion_primes: invariant factor too large");
      for (auto q : prime_divisors(f.get_ui()))
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace ttperm
