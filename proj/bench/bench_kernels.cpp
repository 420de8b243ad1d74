#include <benchmark/benchmark.h>

#include "crystalr/onedsum.hpp"
#include "crystalr/sweep.hpp"

using namespace crystalr;

static void BM_XPolynomials(benchmark::State& state) {
  Partition mu({2, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(x_polynomials(mu, 4));
}
BENCHMARK(BM_XPolynomials)->Unit(benchmark::kMillisecond);

static void BM_XPolynomialsSerial(benchmark::State& state) {
  Partition mu({2, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(x_polynomials_serial(mu, 4));
}
BENCHMARK(BM_XPolynomialsSerial)->Unit(benchmark::kMillisecond);

static void BM_SweepOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rule_vs_oracle(Family::C1, 3, 3, 2));
}
BENCHMARK(BM_SweepOracle)->Unit(benchmark::kMillisecond);

static void BM_SweepOracleSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rule_vs_oracle_serial(Family::C1, 3, 3, 2));
}
BENCHMARK(BM_SweepOracleSerial)->Unit(benchmark::kMillisecond);

static void BM_SweepDiagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rule_vs_diagram(3, 4, 3));
}
BENCHMARK(BM_SweepDiagram)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
