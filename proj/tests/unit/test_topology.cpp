#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ttperm/ttperm.hpp"

using namespace ttperm;

namespace {

using P = WBarPoint;

WBarSubset fin(std::vector<P> pts) { return WBarSubset::finite(std::move(pts)); }

SupportSet level_set(unsigned n, std::vector<std::size_t> positions) {
  SupportSet s(n);
  for (auto pos : positions) s.insert(point_at(pos, n));
  return s;
}

// Random normal-form subset over points of index <= bound.
WBarSubset random_subset(std::mt19937_64& rng, unsigned bound) {
  std::vector<P> pts;
  for (unsigned i = 0; i <= bound; ++i) {
    if (rng() % 3 == 0) pts.push_back(P::m(i));
    if (i > 0 && rng() % 3 == 0) pts.push_back(P::p(i));
  }
  if (rng() % 2) pts.push_back(P::m_infinity());
  return rng() % 2 ? WBarSubset::finite(pts) : WBarSubset::cofinite(pts);
}

}  // namespace

TEST_CASE("closures of points") {
  CHECK(closure(P::m(0)) == fin({P::m(0)}));
  CHECK(closure(P::p(3)) == fin({P::m(2), P::p(3), P::m(3)}));
  CHECK(closure(P::m_infinity()) == fin({P::m_infinity()}));
  CHECK_THROWS_AS(P::p(0), InvalidArgument);
}

TEST_CASE("labels parse back") {
  for (const P& x : {P::m(0), P::p(4), P::m(7), P::m_infinity()}) {
    const auto y = parse_wbar_point(x.label());
    REQUIRE(y.has_value());
    CHECK(*y == x);
  }
  CHECK(!parse_wbar_point("p0").has_value());
  CHECK(!parse_wbar_point("q1").has_value());
  CHECK(!parse_wbar_point("pinf").has_value());
}

TEST_CASE("subset canonical form and boolean operations") {
  CHECK(WBarSubset::finite({P::m(1), P::m(0), P::m(1)}) == fin({P::m(0), P::m(1)}));
  CHECK(WBarSubset::everything().to_string() == "all");
  CHECK(WBarSubset::finite_part().to_string() == "all except {minf}");
  CHECK(WBarSubset::at_least(2).contains(P::m_infinity()));
  CHECK(!WBarSubset::at_least(2).contains(P::p(2)));
  CHECK(WBarSubset::at_most(1) == fin({P::m(0), P::p(1), P::m(1)}));
  CHECK(WBarSubset::at_most(-1) == WBarSubset::empty_set());
  std::mt19937_64 rng(51);
  const auto pts = oracle::sample_points(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_subset(rng, 6), b = random_subset(rng, 6);
    for (const auto& x : pts) {
      const auto y = x.lib();
      CHECK((a | b).contains(y) == (a.contains(y) || b.contains(y)));
      CHECK((a & b).contains(y) == (a.contains(y) && b.contains(y)));
      CHECK(a.complement().contains(y) == !a.contains(y));
      CHECK(a.minus(b).contains(y) == (a.contains(y) && !b.contains(y)));
    }
    CHECK(a.complement().complement() == a);
  }
}

TEST_CASE("predicate examples") {
  CHECK(is_closed(fin({P::m(0), P::p(1), P::m(1)})));
  CHECK(!is_closed(fin({P::p(1)})));
  CHECK(is_closed(WBarSubset::cofinite({P::p(1)})));
  CHECK(is_thomason(WBarSubset::finite_part()));
  CHECK(!is_thomason(fin({P::m_infinity()})));
  CHECK(is_thomason(fin({P::m(2)})));
  CHECK(is_quasicompact(fin({P::p(2), P::m(5)})));
  CHECK(!is_quasicompact(WBarSubset::finite_part()));
  CHECK(is_quasicompact(WBarSubset::everything()));
}

TEST_CASE("predicates agree with brute force on truncations") {
  std::string first;
  std::size_t checked = 0;
  const auto bad = oracle::truncation_sweep(2, &first, &checked);
  CHECK_MESSAGE(bad == 0, first);
  CHECK(checked == 4 * (2 + 8 + 32));
}

TEST_CASE("weakly visible pairs") {
  const auto [vinf, winf] = weakly_visible_pair(P::m_infinity());
  CHECK(vinf == WBarSubset::everything());
  CHECK(winf == WBarSubset::finite_part());
  const auto [vm, wm] = weakly_visible_pair(P::m(3));
  CHECK(vm == fin({P::m(3)}));
  CHECK(wm == WBarSubset::empty_set());
  const auto [vp, wp] = weakly_visible_pair(P::p(2));
  CHECK(vp == WBarSubset::everything());
  CHECK(wp == WBarSubset::cofinite({P::p(2)}));
  for (const auto& x : oracle::sample_points(6)) {
    const auto [v, w] = weakly_visible_pair(x.lib());
    CHECK(is_thomason(v));
    CHECK(is_thomason(w));
    CHECK(v.minus(w) == fin({x.lib()}));
  }
}

TEST_CASE("projection to finite levels") {
  CHECK(project_to_level(P::m_infinity(), 2) == point_m(2, 2));
  CHECK(project_to_level(P::p(3), 1) == point_m(1, 1));
  CHECK(project_to_level(P::p(1), 3) == point_p(1, 3));
  // compatibility with composites of the tower projections
  for (const auto& x : oracle::sample_points(6))
    for (unsigned n = 0; n < 5; ++n)
      CHECK(TowerMap(n).pi(project_to_level(x.lib(), n + 1)) == project_to_level(x.lib(), n));
  // preimage then projection is the identity on every subset of W^n
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (1u << (2 * n + 1)); ++bits) {
      std::vector<bool> bv(2 * n + 1);
      for (unsigned k = 0; k < bv.size(); ++k) bv[k] = (bits >> k) & 1;
      const auto s = SupportSet::from_bits(n, bv);
      CHECK(project_subset(preimage(s), n) == s);
      CHECK(is_closed(preimage(s)) == s.is_specialization_closed());
    }
}

TEST_CASE("tower maps") {
  for (unsigned n = 0; n <= 5; ++n) {
    const TowerMap t(n);
    CHECK(t.is_retraction());
    CHECK(t.pi.is_surjective());
    CHECK(t.pi.is_closed_map());
    CHECK(t.pi.is_continuous());
    CHECK(t.psi.is_continuous());
    for (auto f : t.pi.fiber_sizes()) CHECK((f == 1 || f == 3));
  }
  CHECK(tower_limit(0).sequences.size() == 1);
  const auto two = tower_limit(2);
  CHECK(two.sequences.size() == 5);
  CHECK(TowerMap(1).pi.preimage(level_set(1, {2})).size() == 3);
  for (unsigned depth = 0; depth <= 5; ++depth) {
    const auto lim = tower_limit(depth);
    CHECK(lim.sequences.size() == 2 * depth + 1);
    CHECK(lim.witnesses_unique);
    CHECK(lim.transitions_surjective);
    CHECK(lim.transitions_closed);
    CHECK(lim.transitions_continuous);
  }
}

TEST_CASE("spectral maps of restriction and fixed points") {
  const auto rho = spc_map_rho(1, 2);
  CHECK(rho.image() == level_set(2, {2, 3, 4}));
  const auto psi = spc_map_psi(1, 2);
  CHECK(psi.image() == level_set(2, {0, 1, 2}));
  CHECK(spc_map_psi(3, 3).image() == SupportSet::full(3));
  CHECK_THROWS_AS(spc_map_rho(3, 2), InvalidArgument);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= n; ++m) {
      // image of rho: intersection of supports of k(G/K) over K >= H, i.e. supp k(G/H)
      const auto rho_img = project_subset(support_of_generators(GeneratorExpr::perm(n - m)), n);
      CHECK(spc_map_rho(m, n).image() == rho_img);
      // image of psi for N of order p^(n-i): intersection of supp kos_K over K not containing N
      const unsigned s = n - m;
      WBarSubset meet = WBarSubset::everything();
      for (unsigned t = 0; t < s; ++t) meet = meet & support_of_generators(GeneratorExpr::kos(n - t));
      CHECK(spc_map_psi(m, n).image() == project_subset(meet, n));
      CHECK(spc_map_rho(m, n).is_closed_map());
      CHECK(spc_map_psi(m, n).is_closed_map());
    }
}

TEST_CASE("thick ideal counts") {
  CHECK(count_thick_ideals(0) == 2);
  CHECK(count_thick_ideals(1) == 5);
  CHECK(count_thick_ideals(2) == 13);
  for (unsigned n = 0; n <= 7; ++n) CHECK(count_thick_ideals(n) == oracle::count_specialization_closed(n));
}

TEST_CASE("generator expressions parse and print") {
  CHECK(parse_generator_expr("kos(1)") == GeneratorExpr::kos(1));
  CHECK(parse_generator_expr(" perm(2) + kos(1) ") ==
        GeneratorExpr::sum({GeneratorExpr::perm(2), GeneratorExpr::kos(1)}));
  const auto t = parse_generator_expr("perm(1)*kos(2)");
  CHECK(t == GeneratorExpr::tensor({GeneratorExpr::perm(1), GeneratorExpr::kos(2)}));
  CHECK(t.to_string() == "tensor(perm(1),kos(2))");
  CHECK(parse_generator_expr("perm(1) * kos(3) + kos(1)").kind() == GeneratorExpr::Kind::Sum);
  for (const char* bad : {"kos(", "perm()", "foo(1)", "kos(1) kos(2)", "", "perm(-1)", "tensor()"})
    CHECK_THROWS_AS(parse_generator_expr(bad), ParseError);
  const auto e = parse_generator_expr("sum(tensor(perm(1),kos(3)),kos(1),perm(4))");
  CHECK(parse_generator_expr(e.to_string()) == e);
  CHECK(e.max_index() == 4);
  CHECK(realization_level(e) == 5);
}

TEST_CASE("symbolic supports of generators") {
  CHECK(project_subset(support_of_generators(GeneratorExpr::perm(1)), 2) == level_set(2, {2, 3, 4}));
  CHECK(support_of_generators(GeneratorExpr::kos(1)) == fin({P::m(0)}));
  CHECK(support_of_generators(parse_generator_expr("perm(2)+kos(1)")) ==
        (WBarSubset::at_least(2) | fin({P::m(0)})));
  CHECK(support_of_generators(GeneratorExpr::kos(0)) == WBarSubset::empty_set());
  CHECK(support_of_generators(GeneratorExpr::perm(0)) == WBarSubset::everything());
}

TEST_CASE("realized supports match symbolic supports") {
  const std::vector<std::string> exprs{"perm(0)", "perm(1)", "perm(2)", "kos(1)", "kos(2)",
                                       "perm(1)*kos(2)", "perm(2)+kos(1)", "perm(1)*kos(3)",
                                       "kos(1)*kos(2)", "perm(3)*perm(1)", "kos(0)+perm(3)"};
  for (std::uint32_t p : {2u, 3u})
    for (const auto& text : exprs) {
      const auto e = parse_generator_expr(text);
      for (unsigned level = e.max_index(); level <= realization_level(e) + 1 && level <= 3; ++level) {
        const auto sym = project_subset(support_of_generators(e), level);
        CHECK_MESSAGE(realized_support(e, p, level) == sym, text << " p=" << p << " level=" << level);
        // dense cross-check where the realized complex stays small
        std::optional<PermComplex> dense;
        try {
          dense = realize(e, p, level);
        } catch (const SizeLimitExceeded&) {
        }
        if (dense && dense->total_dim() <= 160) CHECK_MESSAGE(support(*dense) == sym, text);
      }
    }
  CHECK_THROWS_AS(realize(GeneratorExpr::perm(3), 2, 2), InvalidArgument);
}

TEST_CASE("generators of Thomason subsets") {
  const auto g1 = generators_of_thomason(WBarSubset::at_least(2));
  REQUIRE(g1.finite.size() == 1);
  CHECK(g1.finite[0] == GeneratorExpr::perm(2));
  CHECK(!g1.tail.has_value());
  const auto g2 = generators_of_thomason(WBarSubset::at_most(1));
  REQUIRE(g2.finite.size() == 1);
  CHECK(g2.finite[0] == GeneratorExpr::kos(2));
  const auto g3 = generators_of_thomason(fin({P::p(1), P::m(0), P::m(1)}));
  CHECK(support_of_generators(g3) == fin({P::m(0), P::p(1), P::m(1)}));
  const auto tail = generators_of_thomason(WBarSubset::finite_part());
  CHECK(tail.tail.has_value());
  CHECK(support_of_generators(tail) == WBarSubset::finite_part());
  CHECK_THROWS_AS(generators_of_thomason(fin({P::m_infinity()})), InvalidArgument);
  CHECK_THROWS_AS(generators_of_thomason(fin({P::p(1)})), InvalidArgument);

  std::mt19937_64 rng(61);
  std::size_t tested = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const auto s = random_subset(rng, 6);
    if (!is_thomason(s)) continue;
    ++tested;
    CHECK_MESSAGE(support_of_generators(generators_of_thomason(s)) == s, s.to_string());
  }
  CHECK(tested >= 50);
}
