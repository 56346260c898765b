#pragma once

#include <cstddef>
#include <random>

#include "ttperm/rep/perm_complex.hpp"

namespace ttperm {

struct RandomComplexOptions {
  std::size_t max_total_dim = 32;
  int max_length = 3;  // number of nonzero degrees
  int lo = 0;
};

// Basis of Hom_G between permutation modules given by orbit sizes: one matrix
// per (codomain orbit, domain orbit, residue r mod gcd), the block's entry at
// (c', c) being 1 exactly when c' - c = r mod gcd.
std::vector<MatrixFp> equivariant_hom_basis(std::uint32_t p,
                                            const std::vector<std::size_t>& codomain_sizes,
                                            const std::vector<std::size_t>& domain_sizes);

// A random bounded complex: random orbits per degree, differentials chosen
// uniformly from the equivariant maps killing the differential above.
PermComplex random_complex(const CyclicGroup& g, std::mt19937_64& rng,
                           const RandomComplexOptions& opts = {});

// A uniformly random chain map source -> target.
ChainMap random_chain_map(const PermComplex& source, const PermComplex& target,
                          std::mt19937_64& rng);

}  // namespace ttperm
