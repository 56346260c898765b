#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttperm/rep/perm_complex.hpp"

namespace ttperm {

// Points of the spectrum W^n of complexes over C_{p^n}.
//
// Labels follow the index exponent of the subgroup the residue functor takes
// fixed points under, never its order exponent:
//   M(i), 0 <= i <= n: fixed points under H_i = C_{p^{n-i}} (index p^i), then
//                      the underlying complex;
//   P(j), 1 <= j <= n: restrict to H_{j-1}, take fixed points under H_j, and
//                      look at the result in the stable category of
//                      k[H_{j-1}/H_j] = kC_p.
// P(j) specializes to M(j-1) and M(j); the M-points are closed.
enum class PointKind { M, P };

struct WPoint {
  PointKind kind = PointKind::M;
  unsigned index = 0;
  unsigned level = 0;

  // m<i> or p<j>
  std::string label() const;
  // Position in the order m0, p1, m1, p2, ..., mn.
  std::size_t position() const { return kind == PointKind::M ? 2 * index : 2 * index - 1; }
  void validate() const;

  friend bool operator==(const WPoint&, const WPoint&) = default;
};

WPoint point_m(unsigned i, unsigned level);
WPoint point_p(unsigned j, unsigned level);
WPoint point_at(std::size_t position, unsigned level);
// All 2n+1 points in position order.
std::vector<WPoint> points_of_level(unsigned level);

// A subset of W^n.
class SupportSet {
 public:
  explicit SupportSet(unsigned level = 0) : level_(level), bits_(2 * level + 1, false) {}
  static SupportSet full(unsigned level);

  unsigned level() const { return level_; }
  bool contains(const WPoint& x) const;
  void insert(const WPoint& x);
  void erase(const WPoint& x);
  bool empty() const;
  std::size_t size() const;
  std::vector<WPoint> points() const;
  const std::vector<bool>& bits() const { return bits_; }
  static SupportSet from_bits(unsigned level, std::vector<bool> bits);

  // P(j) present implies M(j-1) and M(j) present.
  bool is_specialization_closed() const;

  SupportSet operator|(const SupportSet& o) const;
  SupportSet operator&(const SupportSet& o) const;
  bool subset_of(const SupportSet& o) const;

  // {m0,p1,m1}
  std::string to_string() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  unsigned level_;
  std::vector<bool> bits_;
};

// dim of hyper-Tate cohomology H^i of a complex over kC_p (level 1), taken
// as the cohomology of Hom(complete resolution, c). The totalization is
// finite in each degree, so no truncation is involved. Level 0 gives 0.
std::size_t tate_cohomology(const PermComplex& c, int i);

// Perfect over kC_p, i.e. zero in the stable category: H^0 = H^1 = 0.
bool is_stably_zero(const PermComplex& c);

bool residue_at_m(const PermComplex& c, unsigned i);
bool residue_at_p(const PermComplex& c, unsigned j);

// Checks specialization closure before returning.
SupportSet support(const PermComplex& c);

// c lies in the prime at x iff x is outside supp(c).
bool in_prime(const PermComplex& c, const WPoint& x);

// Residues and support of s_K^G without materializing it. For a fixed-point
// subgroup S not contained in K only the S-fixed subsets are enumerated (see
// koszul_fixed_points). For S <= K every subset is fixed and the result is a
// Koszul object for G/S, whose underlying complex is a tensor power of the
// acyclic k -> k and hence acyclic; it is built densely when within budget
// and otherwise decided by that Kunneth argument.
bool koszul_residue_at_m(const CyclicGroup& g, Subgroup k, unsigned i);
bool koszul_residue_at_p(const CyclicGroup& g, Subgroup k, unsigned j);
SupportSet koszul_support(const CyclicGroup& g, Subgroup k);

}  // namespace ttperm
