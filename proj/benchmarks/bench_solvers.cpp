#include <benchmark/benchmark.h>

#include "regreg/solvers.hpp"
#include "support/fixtures.hpp"

namespace {

regreg::StructuredInstance instance_for(std::size_t p, int t) {
  fixtures::Rng rng(p * 131 + static_cast<std::size_t>(t));
  return fixtures::random_structured(rng, 2, p, t).instance;
}

void BM_Structured(benchmark::State& state) {
  const auto inst = instance_for(static_cast<std::size_t>(state.range(0)), 1);
  std::uint64_t comparisons = 0;
  for (auto _ : state) {
    auto r = regreg::solve_structured(inst);
    comparisons = r.stats.comparisons;
    benchmark::DoNotOptimize(r);
  }
  state.counters["comparisons"] = static_cast<double>(comparisons);
}
BENCHMARK(BM_Structured)->RangeMultiplier(2)->Range(2, 32);

void BM_Mitm(benchmark::State& state) {
  const auto vals = instance_for(static_cast<std::size_t>(state.range(0)), 1).values();
  for (auto _ : state) benchmark::DoNotOptimize(regreg::solve_mitm(vals, {.prune = false}));
}
BENCHMARK(BM_Mitm)->DenseRange(2, 6);

void BM_Dp(benchmark::State& state) {
  const auto vals = instance_for(static_cast<std::size_t>(state.range(0)), 1).values();
  for (auto _ : state) benchmark::DoNotOptimize(regreg::solve_dp(vals));
}
BENCHMARK(BM_Dp)->DenseRange(2, 6);

}  // namespace
