// Serial reference vs OpenMP kernels. Run with --benchmark_counters_tabular=true.

#include <benchmark/benchmark.h>

#include "periodlab/characters.hpp"
#include "periodlab/curve_counts.hpp"
#include "periodlab/kernels.hpp"

using namespace periodlab;

namespace {

constexpr std::uint32_t kPrimes[] = {10007, 100003, 1000003, 10000019};

void BM_CubicSumSerial(benchmark::State& state) {
  const std::uint32_t p = kPrimes[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::cubic_character_sum(p, 3, 7));
  state.counters["p"] = p;
  state.SetItemsProcessed(state.iterations() * p);
}

void BM_CubicSumOmp(benchmark::State& state) {
  const std::uint32_t p = kPrimes[state.range(0)];
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::cubic_character_sum(p, 3, 7, threads));
  state.counters["p"] = p;
  state.counters["threads"] = threads;
  state.SetItemsProcessed(state.iterations() * p);
}

void BM_Fp2SumSerial(benchmark::State& state) {
  const auto field = Fp2Field::canonical(Prime::checked(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::cubic_character_sum_fp2(field, 3, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_Fp2SumOmp(benchmark::State& state) {
  const auto field = Fp2Field::canonical(Prime::checked(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::cubic_character_sum_fp2(field, 3, 7, threads));
  state.counters["threads"] = threads;
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_GaussSumsSerial(benchmark::State& state) {
  const auto tables = CharacterTables::for_prime(Prime::checked(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::gauss_sums(*tables));
}

void BM_GaussSumsOmp(benchmark::State& state) {
  const auto tables = CharacterTables::for_prime(Prime::checked(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::gauss_sums(*tables, threads));
  state.counters["threads"] = threads;
}

}  // namespace

BENCHMARK(BM_CubicSumSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubicSumOmp)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Fp2SumSerial)->Arg(211)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fp2SumOmp)->ArgsProduct({{211, 1009}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GaussSumsSerial)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussSumsOmp)->ArgsProduct({{1009, 4001}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
