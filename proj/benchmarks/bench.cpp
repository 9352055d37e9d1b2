// Microbenchmarks for the hot paths: canonical labeling, the stable
// partition backtracking behind csf, induced-subgraph search, chromatic
// evaluations, and one enumeration level.

#include <csfkit/catalog.hpp>
#include <csfkit/csf.hpp>
#include <csfkit/enumerate.hpp>
#include <csfkit/graph.hpp>
#include <csfkit/recognition.hpp>
#include <csfkit/symfunc.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace csfkit;

namespace {

std::vector<Graph> random_graphs(int n, int count, double density) {
  std::mt19937 rng(20240521);
  std::bernoulli_distribution flip(density);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (flip(rng)) g.add_edge(u, v);
    out.push_back(g);
  }
  return out;
}

void bm_canonical_form(benchmark::State& state) {
  auto graphs = random_graphs(static_cast<int>(state.range(0)), 64, 0.4);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void bm_csf_e(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? catalog::named("F2") : catalog::named("F1");
  for (auto _ : state) benchmark::DoNotOptimize(csf::csf_e(g));
}
BENCHMARK(bm_csf_e)->Arg(0)->Arg(1);

void bm_claw_search(benchmark::State& state) {
  auto graphs = random_graphs(static_cast<int>(state.range(0)), 64, 0.3);
  const Graph claw = catalog::named("claw");
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognition::contains_induced(graphs[i], claw));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(bm_claw_search)->Arg(9)->Arg(12);

void bm_chromatic_poly(benchmark::State& state) {
  const Graph g = catalog::named("F1");
  int k = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf::chromatic_poly(g, k));
    k = k == 9 ? 2 : k + 1;
  }
}
BENCHMARK(bm_chromatic_poly);

void bm_enumeration_level(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate::connected_graphs(n));
}
BENCHMARK(bm_enumeration_level)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_strong_epositivity(benchmark::State& state) {
  const Graph g = catalog::named("F2");
  for (auto _ : state) benchmark::DoNotOptimize(csf::strong_e_positivity(g));
}
BENCHMARK(bm_strong_epositivity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
