#include <random>

#include <benchmark/benchmark.h>

#include "ttperm/ttperm.hpp"

namespace {

ttperm::MatrixFp random_fp(std::uint32_t p, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> e(n * n);
  for (auto& x : e) x = static_cast<std::int64_t>(rng() % p);
  return ttperm::MatrixFp::from_entries(p, n, n, e);
}

ttperm::MatrixZ random_z(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> e(n * n);
  for (auto& x : e) x = static_cast<std::int64_t>(rng() % 19) - 9;
  return ttperm::MatrixZ::from_entries(n, n, e);
}

void BM_RankModP(benchmark::State& state) {
  const auto m = random_fp(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::rank_mod_p(m));
}
BENCHMARK(BM_RankModP)->ArgsProduct({{2, 3}, {64, 256, 512}});

void BM_KernelBasis(benchmark::State& state) {
  const auto m = random_fp(3, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(64)->Arg(256);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_z(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ttperm::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
