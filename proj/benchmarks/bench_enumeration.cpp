#include <benchmark/benchmark.h>

#include "topo/enumeration.hpp"
#include "topo/verification.hpp"

static void BM_EnumerateEulerian(benchmark::State& state) {
  const topo::EnumSpec spec{static_cast<int>(state.range(0)), topo::GraphClass::eulerian, state.range(1) != 0};
  std::uint64_t emitted = 0;
  for (auto _ : state) emitted = topo::enumerate(spec, [](const topo::Graph&) {}, 1).emitted;
  state.counters["graphs"] = static_cast<double>(emitted);
}
BENCHMARK(BM_EnumerateEulerian)->Args({7, 0})->Args({7, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

static void BM_ExtremalHarary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        topo::extremal_scan(topo::GraphClass::eulerian, n, topo::IndexKind::harary, topo::Direction::min, 1));
  }
}
BENCHMARK(BM_ExtremalHarary)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BridgelessScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(topo::extremal_scan(topo::GraphClass::two_edge_connected, n, topo::IndexKind::wiener,
                                                 topo::Direction::max, 1));
  }
}
BENCHMARK(BM_BridgelessScan)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
