#include <benchmark/benchmark.h>

#include "hamsense/oracle.hpp"
#include "hamsense/polysense.hpp"

using namespace hamsense;

static void BM_SubsetSearch(benchmark::State& state) {
  const bool fix_first = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::min_max_degree_subsets(2, 4, 9, {}, fix_first));
}
BENCHMARK(BM_SubsetSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SigmaExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sigma_exact(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_SigmaExact)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveFunctionCheck(benchmark::State& state) {
  const std::vector<Rational> range{Rational(0), Rational(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exhaustive_function_check(integer_domain(static_cast<int>(state.range(0))), 2, range));
  }
}
BENCHMARK(BM_ExhaustiveFunctionCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
