#pragma once

#include <cstddef>

#include "ttperm/rep/perm_complex.hpp"

namespace ttperm {

// Upper bound on the number of basis subsets a Koszul construction may
// enumerate before throwing SizeLimitExceeded.
inline constexpr std::size_t kDefaultKoszulBudget = std::size_t{1} << 12;

// The Koszul object s_K^G: tensor induction from K to G of the two-term
// complex k -> k (identity, degrees 1 and 0).
//
// With m = [G:K], the degree-d basis is the d-subsets T of G/K = Z/m, with
//   d e_T = sum_r (-1)^{r-1} e_{T \ {c_r}}     (c_1 < c_2 < ... the elements of T)
// and the generator rotating T by one, picking up (-1)^{|T|-1} when m-1 is in
// T (moving the last tensor factor to the front). Each rotation orbit is
// rescaled to a genuine permutation orbit: starting from its smallest member
// T_0 the basis is f_k = g^k e_{T_0}. For p odd the sign returned after a full
// period is +1, since a p-group has no nontrivial sign character; for p = 2
// signs are invisible. Orbits are ordered by their smallest member.
//
// The dense complex has 2^m basis vectors; budget caps that number.
PermComplex koszul(const CyclicGroup& g, Subgroup k, std::size_t budget = kDefaultKoszulBudget);

// Psi^S(s_K^G) over G/S, built by enumerating only the S-fixed subsets
// (unions of classes modulo the image of S in G/K). Agrees exactly with
// brauer_fixed_points(koszul(g, k), s) but only pays for the fixed part.
PermComplex koszul_fixed_points(const CyclicGroup& g, Subgroup k, Subgroup s,
                                std::size_t budget = kDefaultKoszulBudget);

// Number of subsets koszul_fixed_points(g, k, s) enumerates.
std::size_t koszul_fixed_basis_size(const CyclicGroup& g, Subgroup k, Subgroup s);

}  // namespace ttperm
