#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ttperm/rep/perm_complex.hpp"

namespace ttperm {

struct TensorProduct {
  PermModule module;
  // position[i * dim(N) + j] = basis index of e_i (x) f_j
  std::vector<std::size_t> position;
};

TensorProduct tensor(const PermModule& m, const PermModule& n);

// Total complex with d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
PermComplex tensor_complexes(const PermComplex& c, const PermComplex& d);

PermComplex direct_sum(const PermComplex& c, const PermComplex& d);

// c[k]: degree d of the result is degree d-k of c; differentials pick up (-1)^k.
PermComplex shift(const PermComplex& c, int k);

PermComplex cone(const ChainMap& f);

// Res^G_H, as a complex over C_{p^s} for H = C_{p^s}.
PermComplex restrict(const PermComplex& c, Subgroup h);

// Restriction to the trivial group.
PermComplex underlying(const PermComplex& c);

// Inflation from C_{p^m} to C_{p^level} along the quotient map, level >= m.
PermComplex inflate(const PermComplex& c, unsigned level);

// Modular fixed points for N = C_{p^s}: the fixed-basis (Brauer) submatrices,
// as a complex over G/N = C_{p^{n-s}}.
PermComplex brauer_fixed_points(const PermComplex& c, Subgroup nsub);

// (degree, dim H_d) for every degree in [lo, hi].
std::vector<std::pair<int, std::size_t>> homology(const PermComplex& c);

bool is_acyclic(const PermComplex& c);

}  // namespace ttperm
