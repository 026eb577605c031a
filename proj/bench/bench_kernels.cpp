// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <random>

#include "kdense/densest.hpp"
#include "kdense/eptas.hpp"
#include "kdense/fpt.hpp"
#include "kdense/oracle.hpp"

namespace {

using namespace kdense;

Graph random_graph(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

void BM_OracleTopkDistinct(benchmark::State& state) {
  const Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_topk_distinct(g, 5, exec_of(state)));
}
BENCHMARK(BM_OracleTopkDistinct)->ArgsProduct({{14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_OracleOverlap(benchmark::State& state) {
  const Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_overlap(g, 2, Rational(1, 2), exec_of(state)));
}
BENCHMARK(BM_OracleOverlap)->ArgsProduct({{10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CaseCovered(benchmark::State& state) {
  const Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.3, 3);
  const std::vector<VertexSet> prior = fpt_topk(g, 3).subgraphs;
  for (auto _ : state) benchmark::DoNotOptimize(case_covered(g, prior, exec_of(state)));
}
BENCHMARK(BM_CaseCovered)->ArgsProduct({{30, 60}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_StrictSupergraph(benchmark::State& state) {
  const Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.2, 4);
  const VertexSet v0{0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(densest_strict_supergraph(g, v0, exec_of(state)));
}
BENCHMARK(BM_StrictSupergraph)->ArgsProduct({{60, 120}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EptasSmallStep(benchmark::State& state) {
  const Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.2, 5);
  const EptasConfig cfg{3, Rational(4)};
  const std::vector<VertexSet> prior{{0, 1}, {2, 3, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(small_step_candidates(g, prior, cfg, exec_of(state)));
}
BENCHMARK(BM_EptasSmallStep)->ArgsProduct({{60}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
