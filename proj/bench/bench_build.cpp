#include <benchmark/benchmark.h>

#include <cstdlib>
#include <string>

#include "cycgraph/theorems.hpp"

using namespace cycgraph;

namespace {

const char* const kGroups[] = {"Z(2)^10", "S(6)", "Z(2)^3xZ(4)^3", "Z(5040)", "A(7)"};

void BM_BuildSerial(benchmark::State& state) {
  auto g = realize(GroupSpec::parse(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(build_serial(g, 100000));
  state.SetLabel(kGroups[state.range(0)]);
}

void BM_BuildParallel(benchmark::State& state) {
  auto g = realize(GroupSpec::parse(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(build(g, 100000));
  state.SetLabel(kGroups[state.range(0)]);
}

// Catalog verification with one worker versus the default worker count.
void BM_Verify(benchmark::State& state, const char* id, bool serial) {
  if (serial) setenv("CYCGRAPH_THREADS", "1", 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem(id, SuiteBounds{200, 5000}));
  if (serial) unsetenv("CYCGRAPH_THREADS");
}

}  // namespace

BENCHMARK(BM_BuildSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, planarity_serial, "thm16-planarity", true)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, planarity_parallel, "thm16-planarity", false)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, alpha_theta_serial, "thm8-alpha-theta", true)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, alpha_theta_parallel, "thm8-alpha-theta", false)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
