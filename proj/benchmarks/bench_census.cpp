#include <benchmark/benchmark.h>

#include "glsg/cayley_table.hpp"
#include "glsg/census.hpp"
#include "glsg/families.hpp"

namespace {

void BM_EnumerateLabeled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::enumerate_labeled(n, nullptr));
  }
}
BENCHMARK(BM_EnumerateLabeled)->DenseRange(2, 4, 1);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glsg::census(n));
  }
}
BENCHMARK(BM_Census)->DenseRange(2, 4, 1);

void BM_CanonicalForm(benchmark::State& state) {
  const glsg::CayleyTable t = glsg::make_rectangular_band(2, 3);
  glsg::Canonicalizer canon(t.order());
  std::vector<int> out;
  for (auto _ : state) {
    canon.run(t.entries(), out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CanonicalForm);

}  // namespace

BENCHMARK_MAIN();
