// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cobound/counterexample.h"
#include "cobound/oracle_search.h"
#include "cobound/selection.h"
#include "cobound/steinitz.h"

namespace {

using namespace cobound;

std::vector<RationalVector> Family(int n) {
  std::mt19937_64 rng(77 + n);
  return RandomZeroSumFamily(rng, n, 2);
}

std::vector<std::vector<RationalVector>> Sets(int n) {
  std::mt19937_64 rng(91 + n);
  std::vector<std::vector<RationalVector>> sets;
  for (int i = 0; i < n; ++i) sets.push_back(RandomZeroSumFamily(rng, 4, 2));
  return sets;
}

void BM_SteinitzOracle(benchmark::State& state) {
  const auto vs = Family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SteinitzOracle(vs, NormKind::kL2));
}

void BM_SteinitzOracleReference(benchmark::State& state) {
  const auto vs = Family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SteinitzOracleReference(vs, NormKind::kL2));
  }
}

void BM_SelectionOracle(benchmark::State& state) {
  const auto sets = Sets(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SelectionOracle(sets, NormKind::kL2));
}

void BM_SelectionOracleReference(benchmark::State& state) {
  const auto sets = Sets(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SelectionOracleReference(sets, NormKind::kL2));
  }
}

void BM_MinHalfSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MinHalfSumExhaustive(d));
}

void BM_MinHalfSumReference(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MinHalfSumExhaustiveReference(d));
}

BENCHMARK(BM_SteinitzOracle)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SteinitzOracleReference)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectionOracle)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectionOracleReference)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinHalfSum)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinHalfSumReference)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
