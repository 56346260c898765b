#pragma once

#include <string>

#include "ttperm/motives/motives.hpp"
#include "ttperm/rep/integral_complex.hpp"
#include "ttperm/rep/perm_complex.hpp"
#include "ttperm/support/support.hpp"
#include "ttperm/topology/wbar.hpp"

namespace ttperm {

// Complex documents are JSON objects
//   {"p": 2, "n": 1,
//    "modules": {"0": [1], "1": [0]},          stabilizer exponents per degree
//    "differentials": {"1": [1, 1]}}           d_d : M_d -> M_{d-1}, row-major
// with bases orbit-major, coset ascending. Degrees between the smallest and
// largest module key that are absent hold the zero module; absent
// differentials are zero. Malformed input throws ParseError; a well-formed
// document that is not an equivariant complex throws InvariantViolation.
std::string complex_to_json(const PermComplex& c, int indent = -1);
PermComplex complex_from_json(const std::string& text);

// Same layout with "ring": "Z", "order": m, stabilizer orders (divisors of m)
// and integer entries (JSON numbers or decimal strings).
std::string integral_complex_to_json(const IntegralPermComplex& t, int indent = -1);
IntegralPermComplex integral_complex_from_json(const std::string& text);

// {"level": n, "points": ["m0", "p1"]}
std::string support_to_json(const SupportSet& s);
// {"mode": "finite" | "cofinite", "points": [...]}
std::string subset_to_json(const WBarSubset& s);
WBarSubset subset_from_json(const std::string& text);
// {"generic": bool, "default": "full" | "empty", "fibers": {"q": subset}}
std::string integral_support_to_json(const IntegralSupport& s);

// Specialization poset of W^level: nodes m0, p1, ..., edges p_j -> m_{j-1}
// and p_j -> m_j.
std::string spectrum_dot(unsigned level);
// W-bar truncated at depth: W^depth plus the isolated closed point m_inf.
std::string procyclic_dot(unsigned depth);

}  // namespace ttperm
