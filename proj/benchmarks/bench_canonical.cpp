#include <benchmark/benchmark.h>

#include "kroncover/canonical.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/kneser.hpp"

namespace {

void BM_CanonicalPetersen(benchmark::State& state) {
  kc::Graph g = kc::kneser_graph(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kc::canonical_form(g).nodes);
}
BENCHMARK(BM_CanonicalPetersen);

void BM_CanonicalKneser83(benchmark::State& state) {
  kc::Graph g = kc::kneser_graph(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kc::canonical_form(g).nodes);
}
BENCHMARK(BM_CanonicalKneser83);

void BM_CanonicalBipartiteKneser73(benchmark::State& state) {
  kc::Graph g = kc::bipartite_kneser(7, 3).bigraph.graph;
  for (auto _ : state) benchmark::DoNotOptimize(kc::canonical_form(g).nodes);
}
BENCHMARK(BM_CanonicalBipartiteKneser73);

void BM_AutomorphismsH62(benchmark::State& state) {
  kc::Graph g = kc::bipartite_kneser(6, 2).bigraph.graph;
  for (auto _ : state) benchmark::DoNotOptimize(kc::automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismsH62);

void BM_GGraphConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kc::g_graph(8, 3, 2).edge_count());
}
BENCHMARK(BM_GGraphConstruction);

}  // namespace

BENCHMARK_MAIN();
