#include <benchmark/benchmark.h>

#include "hqx/oracle.hpp"

namespace {

using hqx::CubeDim;
namespace oracle = hqx::oracle;

oracle::Options threads(const benchmark::State& state) { return {.threads = static_cast<int>(state.range(1))}; }

void BM_MinBoundarySerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::serial::min_boundary_bruteforce(CubeDim(5), static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_MinBoundarySerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MinBoundaryParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::min_boundary_bruteforce(CubeDim(5), static_cast<std::uint64_t>(state.range(0)), threads(state)));
  }
}
BENCHMARK(BM_MinBoundaryParallel)->ArgsProduct({{4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ExtraConnSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::serial::extra_conn_bruteforce(CubeDim(static_cast<int>(state.range(0))), 1));
  }
}
BENCHMARK(BM_ExtraConnSerial)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExtraConnParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::extra_conn_bruteforce(CubeDim(static_cast<int>(state.range(0))), 1, threads(state)));
  }
}
BENCHMARK(BM_ExtraConnParallel)->ArgsProduct({{4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_TrialsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::serial::structure_trials(CubeDim(9), 12, 2000, 7));
  }
}
BENCHMARK(BM_TrialsSerial)->Unit(benchmark::kMillisecond);

void BM_TrialsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::structure_trials(CubeDim(9), 12, 2000, 7, {.threads = static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_TrialsParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
