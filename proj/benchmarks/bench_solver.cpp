#include <benchmark/benchmark.h>

#include "pancake/angenent_oval.hpp"
#include "pancake/harness.hpp"
#include "pancake/profile.hpp"
#include "pancake/solver.hpp"

using namespace pancake;

namespace {

void BM_TimeDerivative(benchmark::State& state) {
  const ProfileCurve c = sample_profile_averaged(-10.0, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(time_derivative(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TimeDerivative)->Arg(256)->Arg(512)->Arg(1024);

void BM_Step(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const FlowState s{sample_profile_averaged(-10.0, n, 2), 0.0, 0};
  SolverConfig cfg;
  cfg.grid_size = n;
  const double dt = stable_dt(s, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(step(s, dt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(256)->Arg(512)->Arg(1024);

void BM_Derive(benchmark::State& state) {
  const ProfileCurve c = sample_profile_averaged(-10.0, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(derive(c));
}
BENCHMARK(BM_Derive)->Arg(512);

void BM_SampleAveraged(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_profile_averaged(-20.0, static_cast<std::size_t>(state.range(0)), 2));
  }
}
BENCHMARK(BM_SampleAveraged)->Arg(512);

void BM_SphereRun(benchmark::State& state) {
  SolverConfig cfg;
  cfg.grid_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_benchmark(2, 1.0, cfg));
}
BENCHMARK(BM_SphereRun)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
