#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttperm/linalg/matrix_fp.hpp"
#include "ttperm/rep/cyclic_group.hpp"
#include "ttperm/rep/detail/graded.hpp"
#include "ttperm/rep/perm_module.hpp"

namespace ttperm {

// A bounded complex of permutation modules over F_p C_{p^n}, homologically
// graded: d_d maps degree d to degree d-1. Construction validates shapes,
// equivariance of every differential and d o d = 0, throwing
// InvariantViolation otherwise.
class PermComplex {
 public:
  // The zero complex.
  explicit PermComplex(CyclicGroup g = {});
  // modules[k] sits in degree lo+k; differentials[k] is d_{lo+k+1}.
  PermComplex(CyclicGroup g, int lo, std::vector<PermModule> modules,
              std::vector<MatrixFp> differentials);

  static PermComplex concentrated(const PermModule& m, int degree = 0);
  static PermComplex unit(const CyclicGroup& g);

  const CyclicGroup& group() const { return group_; }
  // True when every module is zero (after trimming there are none).
  bool is_zero() const;
  int lo() const { return data_.lo; }
  int hi() const { return data_.hi(); }
  PermModule module(int d) const;
  MatrixFp differential(int d) const { return data_.differential(d); }
  std::size_t dim(int d) const { return data_.dim(d); }
  std::size_t total_dim() const;

  std::string to_string() const;

  // Coefficient-generic view used by the functor implementations.
  const detail::Graded<MatrixFp>& graded() const { return data_; }
  static PermComplex from_graded(const CyclicGroup& g, detail::Graded<MatrixFp> data);

  friend bool operator==(const PermComplex& a, const PermComplex& b);

 private:
  CyclicGroup group_;
  detail::Graded<MatrixFp> data_;
};

// A chain map f: source -> target; components[k] is f in degree
// source.lo()+k. Validated for shape, equivariance and d f = f d.
class ChainMap {
 public:
  ChainMap(PermComplex source, PermComplex target, std::vector<MatrixFp> components);

  static ChainMap identity(const PermComplex& c);
  static ChainMap zero(const PermComplex& source, const PermComplex& target);

  const PermComplex& source() const { return source_; }
  const PermComplex& target() const { return target_; }
  // f_d, zero outside the source range.
  MatrixFp component(int d) const;
  const std::vector<MatrixFp>& components() const { return components_; }

 private:
  PermComplex source_;
  PermComplex target_;
  std::vector<MatrixFp> components_;
};

}  // namespace ttperm
