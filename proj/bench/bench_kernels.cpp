#include <benchmark/benchmark.h>

#include "becpolar/orders.hpp"
#include "becpolar/reliability.hpp"
#include "becpolar/synthesis.hpp"

using namespace becpolar;

static void BM_SynthAll(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synth_all(m));
}
BENCHMARK(BM_SynthAll)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_SynthAllSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::synth_all(m));
}
BENCHMARK(BM_SynthAllSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_AvrAll(benchmark::State& state) {
  const ChannelTable t = synth_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(avr_all(t));
}
BENCHMARK(BM_AvrAll)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_AvrAllSerial(benchmark::State& state) {
  const ChannelTable t = synth_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::avr_all(t));
}
BENCHMARK(BM_AvrAllSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_PointwiseMatrix(benchmark::State& state) {
  const ChannelTable t = synth_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pointwise_matrix(t));
}
BENCHMARK(BM_PointwiseMatrix)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_PointwiseMatrixSerial(benchmark::State& state) {
  const ChannelTable t = synth_all(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::pointwise_matrix(t));
}
BENCHMARK(BM_PointwiseMatrixSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_OraclePathCounts(benchmark::State& state) {
  const auto g = build_graph(Monomial::from_int(6, 4));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_path_counts(g));
}
BENCHMARK(BM_OraclePathCounts)->Unit(benchmark::kMillisecond);

static void BM_OraclePathCountsSerial(benchmark::State& state) {
  const auto g = build_graph(Monomial::from_int(6, 4));
  for (auto _ : state) benchmark::DoNotOptimize(serial::oracle_path_counts(g));
}
BENCHMARK(BM_OraclePathCountsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
