#include <benchmark/benchmark.h>

#include "glsg/families.hpp"
#include "glsg/graph.hpp"
#include "glsg/spectrum.hpp"

namespace {

void BM_JacobiNullGraph(benchmark::State& state) {
  const glsg::GlsgGraph g =
      glsg::build_graph(glsg::make_null(static_cast<int>(state.range(0))));
  const std::vector<double> m = glsg::adjacency_matrix(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::eigenvalues_symmetric(m, g.vertex_count()));
  }
  state.SetComplexityN(g.vertex_count());
}
BENCHMARK(BM_JacobiNullGraph)->DenseRange(4, 8, 2)->Complexity();

void BM_SpectrumWithClustering(benchmark::State& state) {
  const glsg::GlsgGraph g =
      glsg::build_graph(glsg::make_null(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::spectrum(g));
  }
}
BENCHMARK(BM_SpectrumWithClustering)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
