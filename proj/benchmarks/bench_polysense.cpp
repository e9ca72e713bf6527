#include <benchmark/benchmark.h>

#include "hamsense/polysense.hpp"

using namespace hamsense;

static void BM_InterpolateLiftedTribes(benchmark::State& state) {
  const FiniteFunction f = lifted_tribes(integer_domain(static_cast<int>(state.range(0))), 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(f));
}
BENCHMARK(BM_InterpolateLiftedTribes)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_InterpolateTribes(benchmark::State& state) {
  const FiniteFunction f = tribes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(f));
}
BENCHMARK(BM_InterpolateTribes)->Arg(2)->Arg(3)->Arg(4);

static void BM_Sensitivity(benchmark::State& state) {
  const FiniteFunction f = lifted_tribes(integer_domain(static_cast<int>(state.range(0))), 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity(f));
}
BENCHMARK(BM_Sensitivity)->Arg(2)->Arg(3);

static void BM_BooleanRestriction(benchmark::State& state) {
  const FiniteFunction f = lifted_tribes(integer_domain(static_cast<int>(state.range(0))), 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(boolean_restriction_witness(f));
}
BENCHMARK(BM_BooleanRestriction)->Arg(3)->Arg(4);
