#include <benchmark/benchmark.h>

#include <random>

#include "topo/canonical.hpp"
#include "topo/constructions.hpp"

static void BM_CanonicalRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.5);
  std::vector<topo::Graph> graphs;
  for (int i = 0; i < 64; ++i) {
    std::vector<topo::Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    graphs.push_back(topo::from_edge_list(n, edges));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(topo::canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalRandom)->Arg(8)->Arg(10);

static void BM_CanonicalComplete(benchmark::State& state) {
  const topo::Graph g = topo::complete(10);
  for (auto _ : state) benchmark::DoNotOptimize(topo::canonical_form(g));
}
BENCHMARK(BM_CanonicalComplete);

static void BM_CanonicalCycle(benchmark::State& state) {
  const topo::Graph g = topo::cycle(10);
  for (auto _ : state) benchmark::DoNotOptimize(topo::canonical_form(g));
}
BENCHMARK(BM_CanonicalCycle);
