#pragma once

#include <cstdint>
#include <vector>

#include "ttperm/support/support.hpp"

namespace ttperm {

// A map of finite spectra W^from -> W^to given pointwise.
class PointMap {
 public:
  PointMap(unsigned from, unsigned to, std::vector<WPoint> images);

  unsigned from_level() const { return from_; }
  unsigned to_level() const { return to_; }
  WPoint operator()(const WPoint& x) const;
  SupportSet image() const;
  SupportSet image(const SupportSet& s) const;
  SupportSet preimage(const SupportSet& s) const;
  // Images of specialization-closed sets are specialization-closed.
  bool is_closed_map() const;
  // Preimages of specialization-closed sets are specialization-closed.
  bool is_continuous() const;
  bool is_surjective() const;
  // Sizes of the fibers over each point of W^to, in position order.
  std::vector<std::size_t> fiber_sizes() const;

 private:
  unsigned from_, to_;
  std::vector<WPoint> images_;
};

// The transition maps between levels n+1 and n: the projection pi sends
// P(n+1) and M(n+1) to M(n), the inclusion psi is the identity on labels.
struct TowerMap {
  unsigned level;
  PointMap pi;   // W^{n+1} -> W^n
  PointMap psi;  // W^n -> W^{n+1}

  explicit TowerMap(unsigned n);
  // pi o psi = id
  bool is_retraction() const;
};

// Spectral map of restriction from C_{p^n} to its subgroup C_{p^m}:
// M(j) -> M(j + n - m), P(j) -> P(j + n - m); image W^n_{>= n-m}.
PointMap spc_map_rho(unsigned m, unsigned n);
// Spectral map of modular fixed points with quotient C_{p^i}: identity on
// labels, image W^n_{<= i}.
PointMap spc_map_psi(unsigned i, unsigned n);

// All sequences (x_0, ..., x_N) with x_n in W^n and pi(x_{n+1}) = x_n,
// together with checks on the transition maps.
struct TowerLimit {
  unsigned depth = 0;
  std::vector<std::vector<WPoint>> sequences;
  // witness[k]: the unique point of W^depth whose projections give sequence k
  std::vector<WPoint> witness;
  bool witnesses_unique = false;
  bool transitions_surjective = false;
  bool transitions_closed = false;
  bool transitions_continuous = false;
  // union over levels of observed fiber sizes of pi
  std::vector<std::size_t> fiber_sizes;
};

TowerLimit tower_limit(unsigned depth);

// Number of specialization-closed subsets of W^n (thick tensor-ideals at level n).
std::uint64_t count_thick_ideals(unsigned n);

}  // namespace ttperm
