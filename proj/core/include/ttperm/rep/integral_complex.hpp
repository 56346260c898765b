#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ttperm/linalg/matrix_z.hpp"
#include "ttperm/rep/detail/graded.hpp"
#include "ttperm/rep/perm_complex.hpp"

namespace ttperm {

// A bounded complex of integral permutation modules over the cyclic group
// C_m (any m >= 1). Each orbit Z(C_m / C_d) is recorded by its stabilizer
// order d, a divisor of m; basis order is orbit-major, coset ascending as in
// the mod-p layer. Validated for equivariance and d o d = 0 over Z.
class IntegralPermComplex {
 public:
  explicit IntegralPermComplex(std::uint64_t order = 1);
  // stabilizers[k] lists the orbits in degree lo+k; differentials[k] is d_{lo+k+1}.
  IntegralPermComplex(std::uint64_t order, int lo, std::vector<std::vector<std::uint64_t>> stabilizers,
                      std::vector<MatrixZ> differentials);

  static IntegralPermComplex unit(std::uint64_t order);
  // Z(C_m / C_d) in the given degree.
  static IntegralPermComplex orbit(std::uint64_t order, std::uint64_t stabilizer, int degree = 0);

  std::uint64_t order() const { return order_; }
  bool is_zero() const { return data_.empty(); }
  int lo() const { return data_.lo; }
  int hi() const { return data_.hi(); }
  std::vector<std::uint64_t> stabilizers(int d) const;
  MatrixZ differential(int d) const { return data_.differential(d); }
  std::size_t dim(int d) const { return data_.dim(d); }

  const detail::Graded<MatrixZ>& graded() const { return data_; }
  static IntegralPermComplex from_graded(std::uint64_t order, detail::Graded<MatrixZ> data);

  std::string to_string() const;

 private:
  std::uint64_t order_;
  detail::Graded<MatrixZ> data_;
};

IntegralPermComplex tensor_complexes(const IntegralPermComplex& a, const IntegralPermComplex& b);
IntegralPermComplex direct_sum(const IntegralPermComplex& a, const IntegralPermComplex& b);
IntegralPermComplex shift(const IntegralPermComplex& a, int k);
// Cone of f: a -> b, components[k] = f in degree a.lo()+k (validated).
IntegralPermComplex cone(const IntegralPermComplex& a, const IntegralPermComplex& b,
                         const std::vector<MatrixZ>& components);

// Restriction to the q-Sylow subgroup C_{q^v} of C_m followed by reduction
// mod q, as a complex over F_q C_{q^v}.
PermComplex sylow_reduction(const IntegralPermComplex& t, std::uint32_t q);

// Ranks of the homology groups tensored with Q, per degree in [lo, hi].
std::vector<std::size_t> rational_betti_numbers(const IntegralPermComplex& t);

// Primes dividing a torsion invariant factor of some differential.
std::vector<std::uint64_t> torsion_primes(const IntegralPermComplex& t);

std::uint64_t p_adic_valuation(std::uint64_t m, std::uint64_t q, std::uint64_t* power = nullptr);
std::vector<std::uint64_t> prime_divisors(std::uint64_t m);

}  // namespace ttperm
