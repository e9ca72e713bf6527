#include "hamsense/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense::oracle {

void SearchBudget::validate() const {
  if (max_vertices == 0 || max_subsets == 0 || max_functions == 0) {
    throw InvalidInput("search budget caps must all be positive");
  }
}

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Adjacency lists of H(n,m), vertex count checked against the budget.
std::vector<std::vector<std::uint32_t>> adjacency(int m, int n, const SearchBudget& budget) {
  budget.validate();
  const RankSpace space(GraphParams(m, n), budget.max_vertices);
  std::vector<std::vector<std::uint32_t>> adj(space.size());
  for (Rank r = 0; r < space.size(); ++r) {
    space.for_each_neighbor(r, [&](Rank u) { adj[r].push_back(static_cast<std::uint32_t>(u)); });
  }
  return adj;
}

void require_subsets(const BigInt& count, const SearchBudget& budget, const std::string& what) {
  if (count > budget.max_subsets) {
    throw ResourceLimit(what + " needs " + count.str() + " subsets, above the cap of " +
                        std::to_string(budget.max_subsets));
  }
}

}  // namespace

SubsetSearchResult min_max_degree_subsets(int m, int n, int k, const SearchBudget& budget, bool fix_first_vertex) {
  const auto adj = adjacency(m, n, budget);
  const auto total = static_cast<std::uint64_t>(adj.size());
  if (k < 0 || static_cast<std::uint64_t>(k) > total) {
    throw InvalidInput("subset size k=" + std::to_string(k) + " outside 0.." + std::to_string(total));
  }
  const GraphParams params(m, n);
  const auto kk = static_cast<std::uint64_t>(k);
  const bool fixed = fix_first_vertex && k > 0;
  require_subsets(fixed ? binomial(total - 1, kk - 1) : binomial(total, kk), budget, "subset search");

  SubsetSearchResult result{std::numeric_limits<int>::max(), VertexSet(params, total), 0};
  if (k == 0) {
    result.min_max_degree = 0;
    result.subsets_examined = 1;
    return result;
  }

  // Lexicographic k-combinations of ranks; inside[] and degree[] are kept incrementally.
  std::vector<std::uint32_t> combo(kk);
  std::vector<std::uint8_t> inside(total, 0);
  std::vector<int> deg(total, 0);
  auto add = [&](std::uint32_t v) {
    inside[v] = 1;
    for (std::uint32_t u : adj[v]) {
      if (inside[u]) {
        ++deg[u];
        ++deg[v];
      }
    }
  };
  auto remove = [&](std::uint32_t v) {
    for (std::uint32_t u : adj[v]) {
      if (inside[u]) {
        --deg[u];
        --deg[v];
      }
    }
    inside[v] = 0;
  };
  for (std::uint32_t i = 0; i < kk; ++i) {
    combo[i] = i;
    add(i);
  }
  // With vertex 0 fixed, position 0 never moves.
  const std::size_t first_free = fixed ? 1 : 0;
  while (true) {
    ++result.subsets_examined;
    int worst = 0;
    for (std::uint32_t v : combo) worst = std::max(worst, deg[v]);
    if (worst < result.min_max_degree) {
      result.min_max_degree = worst;
      result.witness = VertexSet(params, total);
      for (std::uint32_t v : combo) result.witness.insert(v);
    }
    // Next combination.
    std::size_t i = kk;
    while (i > first_free && combo[i - 1] == total - kk + (i - 1)) --i;
    if (i == first_free) break;
    --i;
    for (std::size_t j = i; j < kk; ++j) remove(combo[j]);
    ++combo[i];
    add(combo[i]);
    for (std::size_t j = i + 1; j < kk; ++j) {
      combo[j] = combo[j - 1] + 1;
      add(combo[j]);
    }
  }
  return result;
}

int sigma_exact(int m, int n, const SearchBudget& budget) {
  const GraphParams params(m, n);
  const BigInt k = params.balanced_part_size() + 1;
  if (k > params.vertex_count()) throw InvalidInput("sigma needs m^(n-1) + 1 <= m^n (m >= 2)");
  return min_max_degree_subsets(m, n, k.convert_to<int>(), budget).min_max_degree;
}

namespace {

std::uint64_t subset_mask_count(const std::vector<std::vector<std::uint32_t>>& adj, const SearchBudget& budget,
                                const std::string& what) {
  if (adj.size() >= 63) throw ResourceLimit(what + " over " + std::to_string(adj.size()) + " vertices");
  const std::uint64_t masks = std::uint64_t{1} << adj.size();
  require_subsets(BigInt(masks), budget, what);
  return masks;
}

}  // namespace

std::uint64_t brute_force_independence_number(int m, int n, const SearchBudget& budget) {
  const auto adj = adjacency(m, n, budget);
  const std::uint64_t masks = subset_mask_count(adj, budget, "independence search");
  std::vector<std::uint64_t> nbr(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::uint32_t u : adj[v]) nbr[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (std::size_t v = 0; v < adj.size() && independent; ++v) {
      if ((mask >> v) & 1U) independent = (nbr[v] & mask) == 0;
    }
    if (independent) best = size;
  }
  return best;
}

std::uint64_t brute_force_domination_number(int m, int n, const SearchBudget& budget) {
  const auto adj = adjacency(m, n, budget);
  const std::uint64_t masks = subset_mask_count(adj, budget, "domination search");
  const std::uint64_t all = masks - 1;
  std::vector<std::uint64_t> closed(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (std::uint32_t u : adj[v]) closed[v] |= std::uint64_t{1} << u;
  }
  auto best = static_cast<std::uint64_t>(adj.size());
  for (std::uint64_t mask = 1; mask < masks; ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if ((mask >> v) & 1U) covered |= closed[v];
    }
    if (covered == all) best = size;
  }
  return best;
}

PartitionMetrics brute_force_metrics(const Partition& partition, std::uint64_t max_vertices) {
  const GraphParams& params = partition.params();
  const std::uint64_t total = params.enumerable_count(max_vertices);
  std::vector<Vertex> words;
  words.reserve(total);
  for (Rank r = 0; r < total; ++r) words.push_back(unrank(r, params));

  PartitionMetrics metrics;
  metrics.part_sizes.assign(static_cast<std::size_t>(params.m()), 0);
  for (Rank r = 0; r < total; ++r) ++metrics.part_sizes[partition.part_of(r)];
  const BigInt balanced = params.balanced_part_size();
  metrics.imbalance = 0;
  for (std::uint64_t size : metrics.part_sizes) {
    metrics.imbalance += size >= balanced ? BigInt(size) - balanced : balanced - BigInt(size);
  }
  int best = -1;
  for (Rank x = 0; x < total; ++x) {
    int deg = 0;
    for (Rank y = 0; y < total; ++y) {
      if (partition.part_of(x) == partition.part_of(y) && hamming_distance(words[x], words[y]) == 1) ++deg;
    }
    if (deg > best) {
      best = deg;
      metrics.witness = x;
    }
  }
  metrics.max_degree = std::max(best, 0);
  return metrics;
}

namespace {

void check_one(const FiniteFunction& f, FunctionCheckReport& report) {
  ++report.functions_checked;
  const auto verdict = verify_sensitivity_bound(f);
  report.max_degree_seen = std::max(report.max_degree_seen, verdict.degree);
  if (!verdict.holds) {
    report.violations.push_back({f.values(), "s(f)^2 (m-1) < deg(f)"});
  }
  if (verdict.ratio && (!report.min_ratio || *verdict.ratio < *report.min_ratio)) {
    report.min_ratio = verdict.ratio;
    report.extremal = f.values();
  }
  if (verdict.degree < 1) return;
  ++report.restrictions_run;
  try {
    const RestrictionWitness w = boolean_restriction_witness(f);
    if (w.restricted_degree < w.target_support) {
      report.violations.push_back({f.values(), "deg(g) < D"});
    }
    if (w.restricted_sensitivity > verdict.sensitivity) {
      report.violations.push_back({f.values(), "s(g) > s(f)"});
    }
    const long long sg = w.restricted_sensitivity;
    if (sg * sg < w.target_support) {
      report.violations.push_back({f.values(), "s(g) < sqrt(D)"});
    }
  } catch (const InvariantViolation& e) {
    report.violations.push_back({f.values(), e.what()});
  }
}

}  // namespace

FunctionCheckReport exhaustive_function_check(const std::vector<Rational>& domain, int n,
                                              const std::vector<Rational>& range, const SearchBudget& budget,
                                              std::optional<SamplingPlan> sampling) {
  budget.validate();
  if (range.empty()) throw InvalidInput("function range B is empty");
  const GraphParams params(static_cast<int>(domain.size()), n);
  const std::uint64_t points = params.enumerable_count(budget.max_vertices);
  const BigInt function_count = pow(BigInt(range.size()), static_cast<unsigned>(points));
  const auto k = static_cast<ValueIndex>(range.size());

  FunctionCheckReport report;
  if (sampling) {
    if (sampling->samples > budget.max_functions) {
      throw ResourceLimit("sample count " + std::to_string(sampling->samples) + " above the function cap of " +
                          std::to_string(budget.max_functions));
    }
    report.sampled = true;
    report.seed = sampling->seed;
    std::mt19937_64 rng(sampling->seed);
    std::uniform_int_distribution<ValueIndex> pick(0, k - 1);
    std::vector<ValueIndex> values(points);
    for (std::uint64_t i = 0; i < sampling->samples; ++i) {
      for (auto& v : values) v = pick(rng);
      check_one(FiniteFunction(domain, range, n, values), report);
    }
    return report;
  }

  if (function_count > budget.max_functions) {
    throw ResourceLimit("exhaustive check needs " + function_count.str() + " functions, above the cap of " +
                        std::to_string(budget.max_functions) + "; use sampling with an explicit seed");
  }
  std::vector<ValueIndex> values(points, 0);
  while (true) {
    check_one(FiniteFunction(domain, range, n, values), report);
    std::size_t i = values.size();
    while (i > 0 && values[i - 1] == k - 1) values[--i] = 0;
    if (i == 0) break;
    ++values[i - 1];
  }
  return report;
}

std::vector<BoundsReport> to_reports(const FunctionCheckReport& report, int m, int n) {
  std::vector<BoundsReport> out;
  const std::string mode = report.sampled ? "sampled seed=" + std::to_string(*report.seed) : "exhaustive";
  out.push_back(BoundsReport{"functions-checked", m, n, "-", std::to_string(report.functions_checked), std::nullopt,
                             Verdict::Info, mode});
  out.push_back(BoundsReport{"sensitivity-theorem", m, n, "-", "0", std::to_string(report.violations.size()),
                             report.violations.empty() ? Verdict::Pass : Verdict::Fail, "violations"});
  out.push_back(BoundsReport{"restriction-pipeline", m, n, "-", std::to_string(report.restrictions_run),
                             std::to_string(report.restrictions_run), Verdict::Info, "non-constant functions"});
  out.push_back(BoundsReport{"min-ratio", m, n, "-",
                             report.min_ratio ? format_decimal(*report.min_ratio) : std::string("-"), std::nullopt,
                             Verdict::Info, "s / sqrt(deg/(m-1))"});
  return out;
}

}  // namespace hamsense::oracle
