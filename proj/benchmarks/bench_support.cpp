#include <random>

#include <benchmark/benchmark.h>

#include "ttperm/ttperm.hpp"

namespace {

using ttperm::CyclicGroup;

// args: p, n, total dimension bound
void BM_SupportRandom(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const CyclicGroup g(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto c = ttperm::random_complex(g, rng, {static_cast<std::size_t>(state.range(2)), 3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::support(c));
}
BENCHMARK(BM_SupportRandom)->Args({2, 1, 32})->Args({2, 3, 32})->Args({3, 3, 32})->Args({2, 3, 128});

void BM_TateCohomology(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const CyclicGroup g(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto c = ttperm::random_complex(g, rng, {static_cast<std::size_t>(state.range(1)), 4, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::tate_cohomology(c, 0));
}
BENCHMARK(BM_TateCohomology)->ArgsProduct({{2, 3}, {16, 64, 256}});

void BM_KoszulSupportStructured(benchmark::State& state) {
  const CyclicGroup g(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::koszul_support(g, ttperm::Subgroup{0}));
}
BENCHMARK(BM_KoszulSupportStructured);

void BM_RealizedSupport(benchmark::State& state) {
  const auto e = ttperm::parse_generator_expr("perm(1)*kos(3)+kos(1)");
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::realized_support(e, 2, 3));
}
BENCHMARK(BM_RealizedSupport);

void BM_ThomasonRoundTrip(benchmark::State& state) {
  const auto s = ttperm::WBarSubset::finite({ttperm::WBarPoint::m(0), ttperm::WBarPoint::p(1), ttperm::WBarPoint::m(1),
                                             ttperm::WBarPoint::m(4)});
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::support_of_generators(ttperm::generators_of_thomason(s)));
}
BENCHMARK(BM_ThomasonRoundTrip);

void BM_CountThickIdeals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::count_thick_ideals(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CountThickIdeals)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
