// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "biq/analytics.hpp"
#include "biq/exact_counter.hpp"
#include "biq/recurrence.hpp"

namespace {

biq::Exec exec_of(const benchmark::State& state) {
  return state.range(1) ? biq::Exec::parallel : biq::Exec::serial;
}

void BM_DistinctOracle(benchmark::State& state) {
  const biq::BasePair base(2, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(biq::count_distinct_representations(
        base, static_cast<std::size_t>(state.range(0)), exec_of(state)));
}
BENCHMARK(BM_DistinctOracle)->ArgsProduct({{5'000, 50'000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PartitionOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(biq::count_mary_partitions_oracle(
        3, static_cast<std::size_t>(state.range(0)), exec_of(state)));
}
BENCHMARK(BM_PartitionOracle)->ArgsProduct({{5'000, 50'000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GrowthCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = biq::tabulate_g(3, n);
  const auto h = biq::tabulate_h(3, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(biq::check_g_h_growth(g, h, exec_of(state)));
    benchmark::DoNotOptimize(biq::check_h_log_floor(h, exec_of(state)));
  }
}
BENCHMARK(BM_GrowthCheck)->ArgsProduct({{100'000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_UpperBound(benchmark::State& state) {
  const biq::BasePair base(2, 3);
  const auto f = biq::tabulate_f2q(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(biq::check_upper_bound(base, f, exec_of(state)));
}
BENCHMARK(BM_UpperBound)->ArgsProduct({{1'000'000}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
