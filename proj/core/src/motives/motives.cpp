#include "ttperm/motives/motives.hpp"

#include <algorithm>
#include <limits>

#include "ttperm/error.hpp"
#include "ttperm/rep/koszul.hpp"
#include "ttperm/support/support.hpp"

namespace ttperm {

GaloisDatum::GaloisDatum(std::uint64_t field_size) : q(field_size) {
  const auto primes = prime_divisors(field_size);
  if (field_size < 2 || primes.size() != 1)
    throw InvalidArgument("GaloisDatum: " + std::to_string(field_size) + " is not a prime power");
  prime_ = primes[0];
}

std::string SpectrumDescription::to_string() const {
  if (single_point) return "point";
  return "W-bar(" + std::to_string(coefficient_characteristic) + ")";
}

SpectrumDescription spectrum_of_dam(const GaloisDatum&, std::uint64_t coefficient_characteristic) {
  if (coefficient_characteristic == 0) return {true, 0};
  if (!is_prime(coefficient_characteristic))
    throw InvalidArgument("spectrum_of_dam: characteristic must be 0 or prime");
  return {false, coefficient_characteristic};
}

WBarSubset IntegralSupport::fiber(std::uint64_t q) const {
  auto it = fibers.find(q);
  if (it != fibers.end()) return it->second;
  return default_full ? WBarSubset::everything() : WBarSubset::empty_set();
}

bool IntegralSupport::contains(const IntegralPoint& x) const {
  if (std::holds_alternative<IntegralPoint::Generic>(x.where)) return contains_generic;
  const auto& f = std::get<IntegralPoint::Fiber>(x.where);
  return fiber(f.q).contains(f.x);
}

std::string IntegralSupport::to_string() const {
  std::string out = std::string("generic: ") + (contains_generic ? "yes" : "no") +
                    ", other primes: " + (default_full ? "full" : "empty");
  for (const auto& [q, s] : fibers) out += ", over " + std::to_string(q) + ": " + s.to_string();
  return out;
}

const char* to_string(SupportType t) {
  switch (t) {
    case SupportType::I:
      return "I";
    case SupportType::II:
      return "II";
    default:
      return "invalid";
  }
}

IntegralSupport integral_support(const IntegralPermComplex& t) {
  IntegralSupport out;
  for (auto b : rational_betti_numbers(t))
    if (b != 0) out.contains_generic = true;
  out.default_full = out.contains_generic;

  std::vector<std::uint64_t> primes = prime_divisors(t.order());
  for (auto q : torsion_primes(t))
    if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  for (auto q : primes) {
    if (q > std::numeric_limits<std::uint32_t>::max())
      throw SizeLimitExceeded("integral_support: prime too large");
    const PermComplex reduced = sylow_reduction(t, static_cast<std::uint32_t>(q));
    out.fibers[q] = preimage(support(reduced));
  }
  return out;
}

SupportType classify_support_type(const IntegralSupport& s) {
  if (!s.contains_generic && !s.default_full) {
    for (const auto& [q, f] : s.fibers)
      if (!is_closed(f)) return SupportType::Invalid;
    return SupportType::I;
  }
  if (s.contains_generic && s.default_full) {
    for (const auto& [q, f] : s.fibers)
      if (!is_closed(f) || !f.is_cofinite()) return SupportType::Invalid;
    return SupportType::II;
  }
  return SupportType::Invalid;
}

IntegralPermComplex integral_orbit(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw InvalidArgument("integral_orbit: p must be prime");
  return IntegralPermComplex::orbit(ipow(p, n), 1, 0);
}

IntegralPermComplex integral_multiplication_cone(std::uint64_t q) {
  const std::int64_t entry[] = {static_cast<std::int64_t>(q)};
  return IntegralPermComplex(1, 0, {{1}, {1}}, {MatrixZ::from_entries(1, 1, entry)});
}

IntegralPermComplex integral_koszul(std::uint32_t p, unsigned level, unsigned index_exponent) {
  if (p == 2) throw InvalidArgument("integral_koszul: no sign-compatible lift for p = 2");
  if (index_exponent > level) throw InvalidArgument("integral_koszul: index exceeds level");
  const CyclicGroup g(p, level);
  const PermComplex s = koszul(g, Subgroup{level - index_exponent});
  auto data = detail::make_graded(MatrixZ(0, 0), 0, -1);
  data.lo = s.graded().lo;
  data.sizes = s.graded().sizes;
  for (const auto& m : s.graded().diffs) {
    MatrixZ z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) z.set(i, j, m(i, j) == 1 ? 1 : -1);
    data.diffs.push_back(std::move(z));
  }
  // validation over Z checks that the lifted signs still square to zero
  return IntegralPermComplex::from_graded(g.order(), std::move(data));
}

}  // namespace ttperm
