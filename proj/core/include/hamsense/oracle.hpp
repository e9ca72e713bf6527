#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsense/bounds.hpp"
#include "hamsense/hamming.hpp"
#include "hamsense/partition.hpp"
#include "hamsense/polysense.hpp"

namespace hamsense::oracle {

struct SearchBudget {
  std::uint64_t max_vertices = 64;
  std::uint64_t max_subsets = 50'000'000;
  std::uint64_t max_functions = 1'000'000;

  // Throws InvalidInput unless every cap is positive.
  void validate() const;
};

struct SubsetSearchResult {
  int min_max_degree = 0;
  VertexSet witness;
  std::uint64_t subsets_examined = 0;
};

// Exact min over all k-subsets S of V(H(n,m)) of Delta(S). With fix_first_vertex the
// search only visits subsets containing vertex 0, which is exact because H(n,m) is
// vertex-transitive.
SubsetSearchResult min_max_degree_subsets(int m, int n, int k, const SearchBudget& budget = {},
                                          bool fix_first_vertex = false);

// sigma(H(n,m)): min max degree over subsets of size m^(n-1) + 1.
int sigma_exact(int m, int n, const SearchBudget& budget = {});

// Exhaustive maximum independent set size.
std::uint64_t brute_force_independence_number(int m, int n, const SearchBudget& budget = {});

// Exhaustive domination number.
std::uint64_t brute_force_domination_number(int m, int n, const SearchBudget& budget = {});

// Delta and iota by scanning all vertex pairs; no rank arithmetic.
PartitionMetrics brute_force_metrics(const Partition& partition, std::uint64_t max_vertices = 10'000);

struct FunctionViolation {
  std::vector<ValueIndex> values;
  std::string what;
};

struct FunctionCheckReport {
  std::uint64_t functions_checked = 0;
  std::uint64_t restrictions_run = 0;
  std::vector<FunctionViolation> violations;
  std::optional<double> min_ratio;                  // s / sqrt(deg/(m-1)) over non-constant f
  std::optional<std::vector<ValueIndex>> extremal;  // a function attaining min_ratio
  int max_degree_seen = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
};

struct SamplingPlan {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

// Enumerates every f: A^n -> B (or draws `sampling->samples` of them with the given
// seed), checking the sensitivity inequality and the restriction pipeline on each.
// Throws ResourceLimit when exhaustive enumeration exceeds the budget and no
// sampling plan was supplied.
FunctionCheckReport exhaustive_function_check(const std::vector<Rational>& domain, int n,
                                              const std::vector<Rational>& range, const SearchBudget& budget = {},
                                              std::optional<SamplingPlan> sampling = std::nullopt);

std::vector<BoundsReport> to_reports(const FunctionCheckReport& report, int m, int n);

}  // namespace hamsense::oracle
