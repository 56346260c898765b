#include "ttperm/topology/tower.hpp"

#include <algorithm>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

// Every subset of W^n given as a bitmask over positions; n is small here.
std::vector<SupportSet> all_subsets(unsigned n) {
  const std::size_t k = 2 * n + 1;
  if (k > 20) throw SizeLimitExceeded("subset enumeration beyond level 9");
  std::vector<SupportSet> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<bool> bits(k);
    for (std::size_t b = 0; b < k; ++b) bits[b] = mask >> b & 1;
    out.push_back(SupportSet::from_bits(n, std::move(bits)));
  }
  return out;
}

}  // namespace

PointMap::PointMap(unsigned from, unsigned to, std::vector<WPoint> images)
    : from_(from), to_(to), images_(std::move(images)) {
  if (images_.size() != 2 * from_ + 1) throw InvalidArgument("PointMap: one image per point required");
  for (const auto& y : images_)
    if (y.level != to_) throw InvalidArgument("PointMap: image at the wrong level");
}

WPoint PointMap::operator()(const WPoint& x) const {
  if (x.level != from_) throw InvalidArgument("PointMap: level mismatch");
  return images_[x.position()];
}

SupportSet PointMap::image() const { return image(SupportSet::full(from_)); }

SupportSet PointMap::image(const SupportSet& s) const {
  SupportSet out(to_);
  for (const auto& x : s.points()) out.insert((*this)(x));
  return out;
}

SupportSet PointMap::preimage(const SupportSet& s) const {
  if (s.level() != to_) throw InvalidArgument("PointMap::preimage: level mismatch");
  SupportSet out(from_);
  for (const auto& x : points_of_level(from_))
    if (s.contains((*this)(x))) out.insert(x);
  return out;
}

bool PointMap::is_closed_map() const {
  for (const auto& s : all_subsets(from_))
    if (s.is_specialization_closed() && !image(s).is_specialization_closed()) return false;
  return true;
}

bool PointMap::is_continuous() const {
  for (const auto& s : all_subsets(to_))
    if (s.is_specialization_closed() && !preimage(s).is_specialization_closed()) return false;
  return true;
}

bool PointMap::is_surjective() const { return image().size() == 2 * to_ + 1; }

std::vector<std::size_t> PointMap::fiber_sizes() const {
  std::vector<std::size_t> out(2 * to_ + 1, 0);
  for (const auto& y : images_) ++out[y.position()];
  return out;
}

TowerMap::TowerMap(unsigned n)
    : level(n),
      pi([n] {
        std::vector<WPoint> img;
        for (const auto& x : points_of_level(n + 1))
          img.push_back(x.index <= n ? WPoint{x.kind, x.index, n} : point_m(n, n));
        return PointMap(n + 1, n, std::move(img));
      }()),
      psi([n] {
        std::vector<WPoint> img;
        for (const auto& x : points_of_level(n)) img.push_back(WPoint{x.kind, x.index, n + 1});
        return PointMap(n, n + 1, std::move(img));
      }()) {}

bool TowerMap::is_retraction() const {
  for (const auto& x : points_of_level(level))
    if (!(pi(psi(x)) == x)) return false;
  return true;
}

PointMap spc_map_rho(unsigned m, unsigned n) {
  if (m > n) throw InvalidArgument("spc_map_rho: subgroup level exceeds group level");
  std::vector<WPoint> img;
  for (const auto& x : points_of_level(m)) img.push_back(WPoint{x.kind, x.index + (n - m), n});
  return PointMap(m, n, std::move(img));
}

PointMap spc_map_psi(unsigned i, unsigned n) {
  if (i > n) throw InvalidArgument("spc_map_psi: quotient level exceeds group level");
  std::vector<WPoint> img;
  for (const auto& x : points_of_level(i)) img.push_back(WPoint{x.kind, x.index, n});
  return PointMap(i, n, std::move(img));
}

TowerLimit tower_limit(unsigned depth) {
  TowerLimit out;
  out.depth = depth;
  std::vector<TowerMap> maps;
  for (unsigned n = 0; n < depth; ++n) maps.emplace_back(n);

  // extend coherent prefixes level by level through the fibers of pi
  std::vector<std::vector<WPoint>> seqs;
  for (const auto& x : points_of_level(0)) seqs.push_back({x});
  for (unsigned n = 0; n < depth; ++n) {
    std::vector<std::vector<WPoint>> next;
    for (const auto& s : seqs)
      for (const auto& y : points_of_level(n + 1))
        if (maps[n].pi(y) == s.back()) {
          auto e = s;
          e.push_back(y);
          next.push_back(std::move(e));
        }
    seqs = std::move(next);
  }
  out.sequences = seqs;

  // a sequence is determined by its last entry; check that no other point of
  // W^depth projects to the same sequence
  out.witnesses_unique = true;
  for (const auto& s : seqs) {
    std::size_t matches = 0;
    WPoint found = s.back();
    for (const auto& y : points_of_level(depth)) {
      WPoint cur = y;
      bool ok = cur == s[depth];
      for (unsigned n = depth; ok && n > 0; --n) {
        cur = maps[n - 1].pi(cur);
        ok = cur == s[n - 1];
      }
      if (ok) {
        ++matches;
        found = y;
      }
    }
    out.witness.push_back(found);
    if (matches != 1) out.witnesses_unique = false;
  }

  out.transitions_surjective = out.transitions_closed = out.transitions_continuous = true;
  for (const auto& t : maps) {
    out.transitions_surjective = out.transitions_surjective && t.pi.is_surjective();
    out.transitions_closed = out.transitions_closed && t.pi.is_closed_map();
    out.transitions_continuous = out.transitions_continuous && t.pi.is_continuous();
    for (auto f : t.pi.fiber_sizes())
      if (std::find(out.fiber_sizes.begin(), out.fiber_sizes.end(), f) == out.fiber_sizes.end())
        out.fiber_sizes.push_back(f);
  }
  std::sort(out.fiber_sizes.begin(), out.fiber_sizes.end());
  return out;
}

std::uint64_t count_thick_ideals(unsigned n) {
  // scan M(0), ..., M(n); P(j) is free exactly when M(j-1) and M(j) are both in
  std::uint64_t with = 1, without = 1;  // subsets of the prefix ending at M(0)
  for (unsigned i = 1; i <= n; ++i) {
    const std::uint64_t w = with * 2 + without, wo = with + without;
    with = w;
    without = wo;
  }
  return with + without;
}

}  // namespace ttperm
