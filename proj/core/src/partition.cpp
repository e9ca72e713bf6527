#include "hamsense/partition.hpp"

#include <algorithm>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string triple(int m, int d, int n) {
  return "(m=" + std::to_string(m) + ", d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
}

}  // namespace

Partition::Partition(const GraphParams& p, std::vector<PartIndex> assignment)
    : params_(p), assignment_(std::move(assignment)) {
  if (BigInt(assignment_.size()) != p.vertex_count()) {
    throw InvalidInput("partition assignment has " + std::to_string(assignment_.size()) +
                       " entries, expected " + p.vertex_count().str());
  }
  for (PartIndex part : assignment_) {
    if (part >= static_cast<PartIndex>(p.m())) {
      throw InvalidInput("part index " + std::to_string(part) + " must be < m = " + std::to_string(p.m()));
    }
  }
}

std::vector<std::uint64_t> Partition::part_sizes() const {
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(params_.m()), 0);
  for (PartIndex part : assignment_) ++sizes[part];
  return sizes;
}

VertexSet Partition::part(PartIndex i) const {
  VertexSet s(params_, assignment_.size());
  for (Rank r = 0; r < assignment_.size(); ++r) {
    if (assignment_[r] == i) s.insert(r);
  }
  return s;
}

BigInt imbalance_of(const GraphParams& p, const std::vector<std::uint64_t>& sizes) {
  const BigInt balanced = p.balanced_part_size();
  BigInt total = 0;
  for (std::uint64_t size : sizes) total += abs(BigInt(size) - balanced);
  return total;
}

PartitionMetrics partition_metrics(const Partition& partition) {
  const RankSpace space(partition.params(), partition.assignment().size());
  PartitionMetrics metrics;
  metrics.part_sizes = partition.part_sizes();
  metrics.imbalance = imbalance_of(partition.params(), metrics.part_sizes);
  int best = -1;
  for (Rank r = 0; r < space.size(); ++r) {
    const PartIndex own = partition.part_of(r);
    int deg = 0;
    space.for_each_neighbor(r, [&](Rank u) { deg += partition.part_of(u) == own ? 1 : 0; });
    if (deg > best) {
      best = deg;
      metrics.witness = r;
    }
  }
  metrics.max_degree = std::max(best, 0);
  return metrics;
}

PartIndex degree_one_part(const Vertex& v, int m) {
  const auto digits = v.digits();
  auto last = std::find_if(digits.rbegin(), digits.rend(), [](int d) { return d != 0; });
  if (last == digits.rend()) return 0;
  const auto b_pos = static_cast<std::size_t>(std::distance(last, digits.rend()) - 1);
  long long prefix_sum = 0;
  for (std::size_t i = 0; i < b_pos; ++i) prefix_sum += digits[i];
  const int b = digits[b_pos];
  return static_cast<PartIndex>((prefix_sum + (b + 1) / 2) % m);
}

Partition degree_one_partition(int m, int n, std::uint64_t cap) {
  if (m < 2) throw InvalidInput("degree_one_partition needs m >= 2, got " + std::to_string(m));
  if (n < 1) throw InvalidInput("degree_one_partition needs n >= 1, got " + std::to_string(n));
  if (n == 1) return complete_graph_partition(m, 1);
  const GraphParams params(m, n);
  const std::uint64_t count = params.enumerable_count(cap);
  std::vector<PartIndex> assignment(count);
  for (Rank r = 0; r < count; ++r) assignment[r] = degree_one_part(unrank(r, params), m);
  return Partition(params, std::move(assignment));
}

Partition complete_graph_partition(int m, int d) {
  if (m < 1) throw InvalidInput("complete_graph_partition needs m >= 1, got " + std::to_string(m));
  if (d < 0 || d > m) {
    throw InvalidInput("complete_graph_partition needs 0 <= d <= m, got d=" + std::to_string(d) +
                       ", m=" + std::to_string(m));
  }
  std::vector<PartIndex> assignment(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) assignment[static_cast<std::size_t>(v)] = static_cast<PartIndex>(v / (d + 1));
  return Partition(GraphParams(m, 1), std::move(assignment));
}

std::vector<int> lifting_blocks(int n, int k) {
  if (k < 1 || n < k) {
    throw InvalidInput("cannot split " + std::to_string(n) + " coordinates into " + std::to_string(k) +
                       " nonempty blocks");
  }
  std::vector<int> blocks(static_cast<std::size_t>(k), n / k);
  for (int j = 0; j < n % k; ++j) ++blocks[static_cast<std::size_t>(j)];
  return blocks;
}

LiftMap::LiftMap(int m, int n, int base_n)
    : m_(m), n_(n), base_n_(base_n), blocks_(lifting_blocks(n, base_n)) {
  if (m < 1) throw InvalidInput("lift needs m >= 1");
}

Vertex LiftMap::operator()(const Vertex& x) const {
  x.validate(GraphParams(m_, n_));
  std::vector<int> image;
  image.reserve(blocks_.size());
  std::size_t pos = 0;
  for (int block : blocks_) {
    long long sum = 0;
    for (int i = 0; i < block; ++i) sum += x[pos++];
    image.push_back(static_cast<int>(sum % m_));
  }
  return Vertex(std::move(image));
}

std::vector<Rank> LiftMap::image_table(std::uint64_t cap) const {
  const RankSpace space(GraphParams(m_, n_), cap);
  std::vector<Rank> table(space.size());
  for (Rank r = 0; r < space.size(); ++r) {
    Rank image = 0;
    int coord = 0;
    for (int block : blocks_) {
      long long sum = 0;
      for (int i = 0; i < block; ++i) sum += space.digit(r, coord++);
      image = image * static_cast<Rank>(m_) + static_cast<Rank>(sum % m_);
    }
    table[r] = image;
  }
  return table;
}

Partition lift_partition(const Partition& base, int n, int degree_cap, std::uint64_t cap) {
  const GraphParams& bp = base.params();
  if (n < bp.n()) {
    throw InvalidInput("cannot lift H(" + std::to_string(bp.n()) + ",m) down to n=" + std::to_string(n));
  }
  const LiftMap map(bp.m(), n, bp.n());
  const int base_degree = partition_metrics(base).max_degree;
  if (static_cast<long long>(base_degree) * map.max_block() > degree_cap) {
    throw ContractError("lift degree bound " + std::to_string(base_degree) + " * " +
                        std::to_string(map.max_block()) + " exceeds the cap " + std::to_string(degree_cap));
  }
  const std::vector<Rank> image = map.image_table(cap);
  std::vector<PartIndex> assignment(image.size());
  for (Rank r = 0; r < image.size(); ++r) assignment[r] = base.part_of(image[r]);
  return Partition(GraphParams(bp.m(), n), std::move(assignment));
}

VertexSet lift_vertex_set(const VertexSet& base, int n, std::uint64_t cap) {
  const GraphParams& bp = base.params();
  if (n < bp.n()) {
    throw InvalidInput("cannot lift H(" + std::to_string(bp.n()) + ",m) down to n=" + std::to_string(n));
  }
  const LiftMap map(bp.m(), n, bp.n());
  const std::vector<Rank> image = map.image_table(cap);
  VertexSet lifted(GraphParams(bp.m(), n), cap);
  for (Rank r = 0; r < image.size(); ++r) {
    if (base.contains(image[r])) lifted.insert(r);
  }
  return lifted;
}

namespace {

void check_theorem_params(int m, int d, int n) {
  if (m < 3 || d < 1 || n < 1) {
    throw InvalidInput("theorem construction needs m >= 3, d >= 1, n >= 1; got " + triple(m, d, n));
  }
}

// floor(d/n) capped at m: every degree >= m-1 already allows one part to hold all of K_m.
int complete_graph_degree(int m, int d, int n) { return std::min(d / n, m); }

}  // namespace

TheoremConstruction theorem_partition(int m, int d, int n, std::uint64_t cap) {
  check_theorem_params(m, d, n);
  const GraphParams target(m, n);
  target.enumerable_count(cap);
  const bool small_degree = d < n;
  const Partition base = small_degree ? degree_one_partition(m, ceil_div(n, d), cap)
                                      : complete_graph_partition(m, complete_graph_degree(m, d, n));
  const PartitionMetrics base_metrics = partition_metrics(base);
  Partition lifted = lift_partition(base, n, d, cap);
  const int base_n = base.params().n();
  BigInt achieved = big_pow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n - base_n)) *
                    base_metrics.imbalance;
  return TheoremConstruction{std::move(lifted), std::move(achieved), base_n, base_metrics.max_degree,
                             !small_degree};
}

BigInt theorem_construction_imbalance(int m, int d, int n) {
  check_theorem_params(m, d, n);
  const auto mm = static_cast<std::uint64_t>(m);
  if (d < n) {
    const int base_n = ceil_div(n, d);
    const BigInt base = m % 2 == 0 ? m - 2 : m - 1;
    return big_pow(mm, static_cast<std::uint64_t>(n - base_n)) * base;
  }
  const int dp = complete_graph_degree(m, d, n);
  return big_pow(mm, static_cast<std::uint64_t>(n - 1)) * (2 * ((m * dp) / (dp + 1)));
}

namespace {

void check_subgraph_params(int m, int n, int d) {
  if (m < 3 || n < 1) {
    throw InvalidInput("low_degree_subgraph needs m >= 3, n >= 1; got m=" + std::to_string(m) +
                       ", n=" + std::to_string(n));
  }
  if (d < 1 || d > (m - 1) * n) {
    throw InvalidInput("low_degree_subgraph needs 1 <= d <= (m-1)n = " + std::to_string((m - 1) * n) +
                       ", got d=" + std::to_string(d));
  }
}

}  // namespace

VertexSet low_degree_subgraph(int m, int n, int d, std::uint64_t cap) {
  check_subgraph_params(m, n, d);
  GraphParams(m, n).enumerable_count(cap);
  if (d < n) {
    const VertexSet base = degree_one_partition(m, ceil_div(n, d), cap).part(1);
    return lift_vertex_set(base, n, cap);
  }
  const VertexSet base = complete_graph_partition(m, d / n).part(0);
  return lift_vertex_set(base, n, cap);
}

BigInt low_degree_subgraph_size(int m, int n, int d) {
  check_subgraph_params(m, n, d);
  const auto mm = static_cast<std::uint64_t>(m);
  const BigInt balanced = big_pow(mm, static_cast<std::uint64_t>(n - 1));
  if (d < n) return balanced + big_pow(mm, static_cast<std::uint64_t>(n - ceil_div(n, d)));
  return BigInt(d / n + 1) * balanced;
}

}  // namespace hamsense
