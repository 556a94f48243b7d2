#include <benchmark/benchmark.h>

#include "cospec/entangle.hpp"
#include "cospec/families.hpp"
#include "cospec/spectral.hpp"
#include "cospec/strata.hpp"
#include "cospec/walk.hpp"

using namespace cospec;

static void FamilySpectrum(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  Matrix adj = build_G4(a, a + 2).graph.adjacency_matrix();
  for (auto _ : state) {
    auto s = sym_eig(adj);
    benchmark::DoNotOptimize(s.values.data());
  }
  state.SetComplexityN(adj.rows());
}
BENCHMARK(FamilySpectrum)->DenseRange(1, 6)->Complexity();

static void CospectralPair(benchmark::State& state) {
  Graph g4 = build_G4(3, 5).graph, g5 = build_G5(3, 5).graph;
  for (auto _ : state) {
    auto r = cospectral(g4, g5, 1e-8);
    benchmark::DoNotOptimize(r.max_dev);
  }
}
BENCHMARK(CospectralPair);

static void FermionicQuotient(benchmark::State& state) {
  FamilyInstance inst = build_G4(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) + 2);
  for (auto _ : state) {
    auto fq = fermionic_quotient(inst);
    benchmark::DoNotOptimize(fq.residual);
  }
}
BENCHMARK(FermionicQuotient)->DenseRange(1, 2);

static void WalkTraceGrid(benchmark::State& state) {
  ExampleFixture fx = example("Q4");
  TimeGrid grid{0, 10, 0.1};
  for (auto _ : state) {
    auto table = stratum_probabilities(fx.graph, fx.origin, grid);
    benchmark::DoNotOptimize(table.dual_path_gap);
  }
}
BENCHMARK(WalkTraceGrid);

static void EntropyExperiment(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = g45_entropy_experiment(FamilyTag::G5, a, a + 2, 0.1);
    benchmark::DoNotOptimize(r.spectrum.total);
  }
}
BENCHMARK(EntropyExperiment)->DenseRange(1, 4);

static void BipartiteEntropyDirect(benchmark::State& state) {
  ExampleFixture fx = example("HOFFMAN");
  Matrix v = potential_matrix(fx.graph, 0.1).v;
  std::vector<int> part{0, 1, 2, 3, 4};
  for (auto _ : state) {
    auto es = bipartite_entropy(v, part);
    benchmark::DoNotOptimize(es.total);
  }
}
BENCHMARK(BipartiteEntropyDirect);

BENCHMARK_MAIN();
