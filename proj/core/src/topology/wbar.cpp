#include "ttperm/topology/wbar.hpp"

#include <algorithm>
#include <iterator>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

using Points = std::vector<WBarPoint>;

Points normalized(Points v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Points set_union(const Points& a, const Points& b) {
  Points out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Points set_intersection(const Points& a, const Points& b) {
  Points out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Points set_difference(const Points& a, const Points& b) {
  Points out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

WBarPoint WBarPoint::p(unsigned j) {
  if (j == 0 || j == kInfinity) throw InvalidArgument("P(j) requires 1 <= j < infinity");
  return {PointKind::P, j};
}

std::string WBarPoint::label() const {
  if (is_infinite()) return "minf";
  return (kind == PointKind::M ? "m" : "p") + std::to_string(index);
}

unsigned long long WBarPoint::position() const {
  if (is_infinite()) return std::numeric_limits<unsigned long long>::max();
  return kind == PointKind::M ? 2ULL * index : 2ULL * index - 1;
}

std::optional<WBarPoint> parse_wbar_point(const std::string& label) {
  if (label == "minf" || label == "m_inf" || label == "m∞") return WBarPoint::m_infinity();
  if (label.size() < 2 || (label[0] != 'm' && label[0] != 'p')) return std::nullopt;
  const std::string digits = label.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 9)
    return std::nullopt;
  const unsigned v = static_cast<unsigned>(std::stoul(digits));
  if (label[0] == 'm') return WBarPoint::m(v);
  if (v == 0) return std::nullopt;
  return WBarPoint::p(v);
}

WBarSubset WBarSubset::finite(std::vector<WBarPoint> members) {
  WBarSubset s;
  s.cofinite_ = false;
  s.exceptional_ = normalized(std::move(members));
  return s;
}

WBarSubset WBarSubset::cofinite(std::vector<WBarPoint> missing) {
  WBarSubset s;
  s.cofinite_ = true;
  s.exceptional_ = normalized(std::move(missing));
  return s;
}

WBarSubset WBarSubset::at_least(unsigned n) {
  Points missing;
  for (unsigned i = 0; i < n; ++i) missing.push_back(WBarPoint::m(i));
  for (unsigned j = 1; j <= n; ++j) missing.push_back(WBarPoint::p(j));
  return cofinite(std::move(missing));
}

WBarSubset WBarSubset::at_most(long n) {
  Points members;
  for (long i = 0; i <= n; ++i) members.push_back(WBarPoint::m(static_cast<unsigned>(i)));
  for (long j = 1; j <= n; ++j) members.push_back(WBarPoint::p(static_cast<unsigned>(j)));
  return finite(std::move(members));
}

bool WBarSubset::contains(const WBarPoint& x) const {
  const bool listed = std::binary_search(exceptional_.begin(), exceptional_.end(), x);
  return cofinite_ ? !listed : listed;
}

WBarSubset WBarSubset::complement() const {
  WBarSubset s = *this;
  s.cofinite_ = !cofinite_;
  return s;
}

WBarSubset WBarSubset::operator|(const WBarSubset& o) const {
  if (!cofinite_ && !o.cofinite_) return finite(set_union(exceptional_, o.exceptional_));
  if (cofinite_ && o.cofinite_) return cofinite(set_intersection(exceptional_, o.exceptional_));
  const WBarSubset& fin = cofinite_ ? o : *this;
  const WBarSubset& cof = cofinite_ ? *this : o;
  return cofinite(set_difference(cof.exceptional_, fin.exceptional_));
}

WBarSubset WBarSubset::operator&(const WBarSubset& o) const {
  return (complement() | o.complement()).complement();
}

unsigned WBarSubset::max_index() const {
  unsigned m = 0;
  for (const auto& x : exceptional_)
    if (!x.is_infinite()) m = std::max(m, x.index);
  return m;
}

std::string WBarSubset::to_string() const {
  std::string body = "{";
  for (std::size_t k = 0; k < exceptional_.size(); ++k)
    body += (k ? "," : "") + exceptional_[k].label();
  body += "}";
  if (!cofinite_) return body;
  return exceptional_.empty() ? "all" : "all except " + body;
}

WBarSubset closure(const WBarPoint& x) {
  if (x.kind == PointKind::M) return WBarSubset::finite({x});
  return WBarSubset::finite({WBarPoint::m(x.index - 1), x, WBarPoint::m(x.index)});
}

bool is_specialization_closed(const WBarSubset& s) {
  if (s.is_finite()) {
    for (const auto& x : s.exceptional())
      if (x.kind == PointKind::P && !(s.contains(WBarPoint::m(x.index - 1)) && s.contains(WBarPoint::m(x.index))))
        return false;
    return true;
  }
  for (const auto& x : s.exceptional()) {
    if (x.kind != PointKind::M || x.is_infinite()) continue;
    if (x.index >= 1 && s.contains(WBarPoint::p(x.index))) return false;
    if (s.contains(WBarPoint::p(x.index + 1))) return false;
  }
  return true;
}

bool is_closed(const WBarSubset& s) {
  return is_specialization_closed(s) && (s.is_finite() || s.contains(WBarPoint::m_infinity()));
}

bool is_thomason(const WBarSubset& s) {
  return is_specialization_closed(s) && (!s.contains(WBarPoint::m_infinity()) || s.is_cofinite());
}

bool is_quasicompact(const WBarSubset& s) {
  return s.contains(WBarPoint::m_infinity()) || s.is_finite();
}

std::pair<WBarSubset, WBarSubset> weakly_visible_pair(const WBarPoint& x) {
  if (x.is_infinite()) return {WBarSubset::everything(), WBarSubset::finite_part()};
  if (x.kind == PointKind::M) return {WBarSubset::finite({x}), WBarSubset::empty_set()};
  return {WBarSubset::everything(), WBarSubset::cofinite({x})};
}

WPoint project_to_level(const WBarPoint& x, unsigned n) {
  if (x.kind == PointKind::M) return point_m(x.is_infinite() ? n : std::min(x.index, n), n);
  return x.index <= n ? point_p(x.index, n) : point_m(n, n);
}

SupportSet project_subset(const WBarSubset& s, unsigned n) {
  SupportSet out(n);
  if (s.is_finite()) {
    for (const auto& x : s.exceptional()) out.insert(project_to_level(x, n));
    return out;
  }
  // points below M(n) have singleton fibers; the fiber over M(n) is infinite
  for (const auto& y : points_of_level(n)) {
    if (y.kind == PointKind::M && y.index == n) {
      out.insert(y);
      continue;
    }
    const WBarPoint x{y.kind, y.index};
    if (s.contains(x)) out.insert(y);
  }
  return out;
}

WBarSubset preimage(const SupportSet& s) {
  const unsigned n = s.level();
  Points listed;
  const bool top = s.contains(point_m(n, n));
  for (const auto& y : points_of_level(n)) {
    if (y.kind == PointKind::M && y.index == n) continue;
    const WBarPoint x{y.kind, y.index};
    if (s.contains(y) != top) listed.push_back(x);
  }
  // top in s: everything at or above M(n) plus the listed lower points
  if (top) return WBarSubset::cofinite(std::move(listed));
  return WBarSubset::finite(std::move(listed));
}

}  // namespace ttperm
