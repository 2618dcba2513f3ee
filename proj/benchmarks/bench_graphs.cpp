#include "extrop/moduli.hpp"

#include <benchmark/benchmark.h>

using namespace extrop;

namespace {

void BM_EnumerateSplitting(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_splitting(0, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateSplitting)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_partition(0, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumeratePartition)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Atlas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moduli_atlas(1, static_cast<int>(state.range(0))).contractions.size());
}
BENCHMARK(BM_Atlas)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
