#include <benchmark/benchmark.h>

#include "hamsense/partition.hpp"

using namespace hamsense;

static void BM_DegreeOnePartition(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(degree_one_partition(m, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(GraphParams(m, n).enumerable_count()));
}
BENCHMARK(BM_DegreeOnePartition)->Args({4, 3})->Args({4, 6})->Args({6, 6})->Args({10, 5});

static void BM_PartitionMetrics(benchmark::State& state) {
  const Partition p = degree_one_partition(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_metrics(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.assignment().size()));
}
BENCHMARK(BM_PartitionMetrics)->Args({4, 3})->Args({4, 6})->Args({6, 6})->Args({10, 5});

static void BM_TheoremPartition(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_partition(5, d, 7));
}
BENCHMARK(BM_TheoremPartition)->Arg(1)->Arg(3)->Arg(7)->Arg(20);

static void BM_InducedMaxDegree(benchmark::State& state) {
  const VertexSet s = low_degree_subgraph(4, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(induced_max_degree(s));
}
BENCHMARK(BM_InducedMaxDegree)->Arg(4)->Arg(8)->Arg(10);
