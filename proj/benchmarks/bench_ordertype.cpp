#include <benchmark/benchmark.h>

#include "regreg/ordertype.hpp"

namespace {

void BM_EnumerateClasses(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regreg::enumerate_classes(k));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(2, 6);

void BM_Signature(benchmark::State& state) {
  const regreg::KTuple x{7, 3, 3, 9, 1, 7};
  for (auto _ : state) benchmark::DoNotOptimize(regreg::signature(x));
}
BENCHMARK(BM_Signature);

}  // namespace
BENCHMARK_MAIN();
