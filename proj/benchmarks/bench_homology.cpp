#include <benchmark/benchmark.h>

#include "kroncover/complex.hpp"
#include "kroncover/homology.hpp"
#include "kroncover/kneser.hpp"

namespace {

void BM_HomologyNK62(benchmark::State& state) {
  kc::SimplicialComplex complex = kc::neighborhood_complex(kc::kneser_graph(6, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(kc::reduced_homology(complex, 1).dims[1].betti);
}
BENCHMARK(BM_HomologyNK62);

void BM_TietzeNK62(benchmark::State& state) {
  kc::SimplicialComplex complex = kc::neighborhood_complex(kc::kneser_graph(6, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(kc::connectivity_evidence(complex, 1).verdict.size());
}
BENCHMARK(BM_TietzeNK62);

void BM_ComplexIso52(benchmark::State& state) {
  kc::SimplicialComplex a = kc::neighborhood_complex(kc::kneser_graph(5, 2));
  kc::SimplicialComplex b = kc::neighborhood_complex(kc::g_graph(5, 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(kc::complexes_isomorphic(a, b).has_value());
}
BENCHMARK(BM_ComplexIso52);

}  // namespace
