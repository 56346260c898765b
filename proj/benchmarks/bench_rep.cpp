#include <random>

#include <benchmark/benchmark.h>

#include "ttperm/ttperm.hpp"

namespace {

using ttperm::CyclicGroup;
using ttperm::Subgroup;

// args: p, n, subgroup exponent
void BM_KoszulDense(benchmark::State& state) {
  const CyclicGroup g(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::koszul(g, Subgroup{static_cast<unsigned>(state.range(2))}));
}
BENCHMARK(BM_KoszulDense)->Args({2, 2, 0})->Args({2, 3, 0})->Args({3, 2, 0})->Args({3, 3, 1});

// Fixed part of s_1^{C_27} under each nontrivial subgroup; the dense object is out of reach.
void BM_KoszulFixedPoints(benchmark::State& state) {
  const CyclicGroup g(3, 3);
  const Subgroup s{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::koszul_fixed_points(g, Subgroup{0}, s));
}
BENCHMARK(BM_KoszulFixedPoints)->Arg(1)->Arg(2)->Arg(3);

void BM_TensorComplexes(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const CyclicGroup g(static_cast<std::uint32_t>(state.range(0)), 2);
  const std::size_t dim = static_cast<std::size_t>(state.range(1));
  const auto a = ttperm::random_complex(g, rng, {dim, 3, 0});
  const auto b = ttperm::random_complex(g, rng, {dim, 3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::tensor_complexes(a, b));
}
BENCHMARK(BM_TensorComplexes)->ArgsProduct({{2, 3}, {8, 16, 32}});

void BM_BrauerFixedPoints(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const CyclicGroup g(2, 3);
  const auto c = ttperm::random_complex(g, rng, {64, 4, 0});
  const Subgroup s{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::brauer_fixed_points(c, s));
}
BENCHMARK(BM_BrauerFixedPoints)->DenseRange(0, 3);

}  // namespace
