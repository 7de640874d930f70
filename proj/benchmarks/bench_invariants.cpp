// The point of the counting pass: O(n^2) per table versus the O(n^4)
// adjacency enumeration it replaces.

#include <benchmark/benchmark.h>

#include "glsg/families.hpp"
#include "glsg/graph.hpp"
#include "glsg/invariants.hpp"

namespace {

void BM_FormulaDegrees(benchmark::State& state) {
  const glsg::CayleyTable t = glsg::make_null(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::compute_invariants(t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FormulaDegrees)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_OracleDegrees(benchmark::State& state) {
  const glsg::CayleyTable t = glsg::make_null(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const glsg::GlsgGraph g = glsg::build_graph(t);
    benchmark::DoNotOptimize(glsg::naive_degrees(g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleDegrees)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_RegularityCheck(benchmark::State& state) {
  const glsg::CayleyTable t = glsg::make_cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::is_regular_glsg(t));
  }
}
BENCHMARK(BM_RegularityCheck)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
