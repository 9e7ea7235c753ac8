#include <benchmark/benchmark.h>

#include "topo/constructions.hpp"
#include "topo/indices.hpp"

static void BM_DistanceMatrix(benchmark::State& state) {
  const topo::Graph g = topo::g_pair(static_cast<int>(state.range(0))).g2;
  for (auto _ : state) benchmark::DoNotOptimize(topo::distance_matrix(g));
}
BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(32)->Arg(64);

static void BM_ComputeIndices(benchmark::State& state) {
  const topo::Graph g = topo::g_pair(static_cast<int>(state.range(0))).g2;
  for (auto _ : state) benchmark::DoNotOptimize(topo::compute_indices(g));
}
BENCHMARK(BM_ComputeIndices)->Arg(16)->Arg(64);

static void BM_CycleClosedForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(topo::cycle_closed_forms(n));
}
BENCHMARK(BM_CycleClosedForms)->Arg(64)->Arg(1000);
