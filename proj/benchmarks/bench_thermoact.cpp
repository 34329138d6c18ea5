#include <benchmark/benchmark.h>

#include "thermoact/electrothermal.hpp"
#include "thermoact/study.hpp"
#include "thermoact/thermomech.hpp"

using namespace thermoact;

static void BM_Simulate(benchmark::State& state) {
  const auto spec = validate(default_spec());
  for (auto _ : state) benchmark::DoNotOptimize(thermomech::simulate(spec));
}
BENCHMARK(BM_Simulate);

static void BM_TemperatureProfile(benchmark::State& state) {
  const auto spec = validate(default_spec());
  for (auto _ : state) {
    const auto profile = electrothermal::solve_temperature_profile(spec);
    benchmark::DoNotOptimize(electrothermal::arm_elongations(profile, spec.geometry(), spec.material()));
  }
}
BENCHMARK(BM_TemperatureProfile);

static void BM_FiniteDifferenceOracle(benchmark::State& state) {
  const auto spec = validate(default_spec());
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(electrothermal::fd_temperature_oracle(spec, nodes));
}
BENCHMARK(BM_FiniteDifferenceOracle)->Arg(257)->Arg(4097);

static void BM_StiffnessOracle(benchmark::State& state) {
  const auto spec = validate(default_spec());
  const int elements = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thermomech::stiffness_oracle(spec, elements));
}
BENCHMARK(BM_StiffnessOracle)->Arg(16)->Arg(64);

static void BM_RatioSweep(benchmark::State& state) {
  const auto plan = study::ratio_plan(default_spec());
  study::SweepOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(study::run_sweep(plan, options));
}
BENCHMARK(BM_RatioSweep)->Arg(1)->Arg(4);

static void BM_FindOptimalRatio(benchmark::State& state) {
  const auto base = default_spec();
  for (auto _ : state) benchmark::DoNotOptimize(study::find_optimal_ratio(base));
}
BENCHMARK(BM_FindOptimalRatio);

BENCHMARK_MAIN();
