#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ttperm/linalg/matrix_fp.hpp"
#include "ttperm/rep/cyclic_group.hpp"

namespace ttperm {

// A finitely generated permutation module over F_p C_{p^n}: a direct sum of
// orbit modules k(G/C_{p^s}), recorded by their stabilizer exponents s.
//
// Basis order is orbit-major, coset ascending: basis vector (t, c) for orbit t
// and coset c in Z/p^{n-s_t}. The generator maps (t, c) to (t, c+1).
struct PermModule {
  CyclicGroup group;
  std::vector<unsigned> orbits;

  PermModule() = default;
  PermModule(CyclicGroup g, std::vector<unsigned> stabilizers);

  std::size_t orbit_count() const { return orbits.size(); }
  std::size_t orbit_size(std::size_t t) const { return ipow(group.p, group.n - orbits[t]); }
  std::size_t dim() const;
  std::vector<std::size_t> orbit_sizes() const;
  // Index of basis vector (t, 0).
  std::vector<std::size_t> offsets() const;

  // Matrix of the generator acting on this module.
  MatrixFp generator_action() const;

  std::string to_string() const;

  friend bool operator==(const PermModule&, const PermModule&) = default;
};

PermModule orbit_module(const CyclicGroup& g, Subgroup stabilizer);
PermModule trivial_module(const CyclicGroup& g);
PermModule zero_module(const CyclicGroup& g);
PermModule direct_sum(const PermModule& a, const PermModule& b);

// A G-equivariant linear map between permutation modules.
struct EquivariantMap {
  PermModule domain;
  PermModule codomain;
  MatrixFp matrix;

  bool is_equivariant() const;
};

// Equivariance test for a matrix between modules given by orbit sizes:
// entry[(t',c'+1),(t,c+1)] == entry[(t',c'),(t,c)] with cosets taken modulo
// the orbit sizes.
template <class Matrix>
bool is_equivariant_matrix(const Matrix& m, const std::vector<std::size_t>& codomain_sizes,
                           const std::vector<std::size_t>& domain_sizes);

}  // namespace ttperm

#include "ttperm/rep/detail/equivariance.ipp"
