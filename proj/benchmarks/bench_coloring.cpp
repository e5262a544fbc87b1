#include <benchmark/benchmark.h>

#include "kroncover/coloring.hpp"
#include "kroncover/kneser.hpp"

namespace {

void BM_ChromaticKneser62(benchmark::State& state) {
  kc::Graph g = kc::kneser_graph(6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kc::chromatic_number_exact(g).value());
}
BENCHMARK(BM_ChromaticKneser62);

void BM_ChromaticKneser72(benchmark::State& state) {
  kc::Graph g = kc::kneser_graph(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kc::chromatic_number_exact(g).value());
}
BENCHMARK(BM_ChromaticKneser72);

void BM_ChromaticKneser83(benchmark::State& state) {
  kc::Graph g = kc::kneser_graph(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kc::chromatic_number_exact(g).value());
}
BENCHMARK(BM_ChromaticKneser83);

void BM_Theorem3Coloring94(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kc::theorem3_coloring(9, 4, 3).palette);
}
BENCHMARK(BM_Theorem3Coloring94);

}  // namespace
