#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttperm/support/support.hpp"

namespace ttperm {

inline constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

// A point of the spectrum W-bar of complexes over Z_p: M(i) for i in N or
// i = infinity, and P(j) for 1 <= j < infinity. Ordered m0 < p1 < m1 < ... < m_inf.
struct WBarPoint {
  PointKind kind = PointKind::M;
  unsigned index = 0;

  static WBarPoint m(unsigned i) { return {PointKind::M, i}; }
  static WBarPoint p(unsigned j);
  static WBarPoint m_infinity() { return {PointKind::M, kInfinity}; }

  bool is_infinite() const { return index == kInfinity; }
  // m<i>, p<j> or minf
  std::string label() const;
  // 2i for M(i), 2j-1 for P(j), and the largest value for M(inf)
  unsigned long long position() const;

  friend bool operator==(const WBarPoint&, const WBarPoint&) = default;
  friend bool operator<(const WBarPoint& a, const WBarPoint& b) { return a.position() < b.position(); }
};

std::optional<WBarPoint> parse_wbar_point(const std::string& label);

// A finite or cofinite subset of W-bar. In finite mode `exceptional` lists the
// members, in cofinite mode the non-members. Since W-bar is infinite the two
// modes never overlap, so the representation is canonical.
class WBarSubset {
 public:
  WBarSubset() = default;
  static WBarSubset finite(std::vector<WBarPoint> members);
  static WBarSubset cofinite(std::vector<WBarPoint> missing);
  static WBarSubset empty_set() { return finite({}); }
  static WBarSubset everything() { return cofinite({}); }
  // W-bar_{>= n} = {m_n, p_{n+1}, m_{n+1}, ..., m_inf}
  static WBarSubset at_least(unsigned n);
  // W-bar_{<= n} = {m_0, p_1, ..., m_n}; at_most(-1) is empty
  static WBarSubset at_most(long n);
  // W = W-bar minus m_inf
  static WBarSubset finite_part() { return cofinite({WBarPoint::m_infinity()}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_finite() const { return !cofinite_; }
  const std::vector<WBarPoint>& exceptional() const { return exceptional_; }
  bool contains(const WBarPoint& x) const;

  WBarSubset complement() const;
  WBarSubset operator|(const WBarSubset& o) const;
  WBarSubset operator&(const WBarSubset& o) const;
  WBarSubset minus(const WBarSubset& o) const { return *this & o.complement(); }

  // Largest finite index mentioned by the exceptional set (0 if none).
  unsigned max_index() const;

  // {m0,p1} or "all except {minf}"
  std::string to_string() const;

  friend bool operator==(const WBarSubset&, const WBarSubset&) = default;

 private:
  bool cofinite_ = false;
  std::vector<WBarPoint> exceptional_;  // sorted, unique
};

WBarSubset closure(const WBarPoint& x);
bool is_specialization_closed(const WBarSubset& s);
// Specialization-closed, and finite or containing m_inf.
bool is_closed(const WBarSubset& s);
// Specialization-closed, and cofinite whenever it contains m_inf.
bool is_thomason(const WBarSubset& s);
// Contains m_inf or is finite.
bool is_quasicompact(const WBarSubset& s);

// Thomason V, W with V minus W = {x}.
std::pair<WBarSubset, WBarSubset> weakly_visible_pair(const WBarPoint& x);

// Image under W-bar -> W^n: M(i) -> M(min(i, n)), P(j) -> P(j) for j <= n and
// M(n) otherwise.
WPoint project_to_level(const WBarPoint& x, unsigned n);
SupportSet project_subset(const WBarSubset& s, unsigned n);
// Preimage of a level-n subset; the fiber over M(n) is W-bar_{>= n}.
WBarSubset preimage(const SupportSet& s);

}  // namespace ttperm
