#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsense/hamming.hpp"

namespace hamsense {

using PartIndex = std::uint32_t;

// Total assignment of every vertex of H(n,m) to one of m parts. Parts may be empty.
class Partition {
 public:
  Partition(const GraphParams& p, std::vector<PartIndex> assignment);

  const GraphParams& params() const { return params_; }
  int part_count() const { return params_.m(); }
  PartIndex part_of(Rank r) const { return assignment_[r]; }
  const std::vector<PartIndex>& assignment() const { return assignment_; }

  std::vector<std::uint64_t> part_sizes() const;
  VertexSet part(PartIndex i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  GraphParams params_;
  std::vector<PartIndex> assignment_;
};

struct PartitionMetrics {
  int max_degree = 0;
  BigInt imbalance;
  std::vector<std::uint64_t> part_sizes;
  std::optional<Rank> witness;  // a vertex attaining max_degree inside its own part

  friend bool operator==(const PartitionMetrics&, const PartitionMetrics&) = default;
};

// sum_i | sizes[i] - m^(n-1) |
BigInt imbalance_of(const GraphParams& p, const std::vector<std::uint64_t>& sizes);

PartitionMetrics partition_metrics(const Partition& partition);

// Every nonzero word is x # b # 0^k with b its last nonzero digit; it goes to part
// (sum(x) + floor((b+1)/2)) mod m, and 0^n goes to part 0. Parts induce matchings.
// n == 1 delegates to complete_graph_partition(m, 1).
Partition degree_one_partition(int m, int n, std::uint64_t cap = kDefaultVertexCap);

// Part index that degree_one_partition assigns to a single word.
PartIndex degree_one_part(const Vertex& v, int m);

// K_m split into blocks of d+1 consecutive vertices: full blocks first, then the
// remainder block, then empty parts.
Partition complete_graph_partition(int m, int d);

// Contiguous coordinate blocks P_1..P_k of [n], sizes as equal as possible with the
// larger blocks first. Returns the block sizes.
std::vector<int> lifting_blocks(int n, int k);

// sigma(x)_j = (sum of x over block j) mod m, as a rank in H(k, m).
class LiftMap {
 public:
  LiftMap(int m, int n, int base_n);

  int m() const { return m_; }
  int n() const { return n_; }
  int base_n() const { return base_n_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int max_block() const { return blocks_.empty() ? 0 : blocks_.front(); }

  Vertex operator()(const Vertex& x) const;
  // Images of all ranks of H(n,m) in rank order.
  std::vector<Rank> image_table(std::uint64_t cap = kDefaultVertexCap) const;

 private:
  int m_;
  int n_;
  int base_n_;
  std::vector<int> blocks_;
};

// Pulls `base` back along the block-sum map. Throws ContractError when
// Delta(base) * ceil(n/n') exceeds degree_cap.
Partition lift_partition(const Partition& base, int n, int degree_cap,
                         std::uint64_t cap = kDefaultVertexCap);

VertexSet lift_vertex_set(const VertexSet& base, int n, std::uint64_t cap = kDefaultVertexCap);

struct TheoremConstruction {
  Partition partition;
  BigInt achieved_imbalance;  // m^(n-n') * iota(base), as the lift guarantees
  int base_n = 0;
  int base_degree = 0;  // Delta of the base partition
  bool from_complete_graph = false;
};

// d < n: degree-one partition of H(ceil(n/d), m) lifted to n.
// d >= n: K_m partition with degree floor(d/n) (clamped to m) lifted to n.
TheoremConstruction theorem_partition(int m, int d, int n, std::uint64_t cap = kDefaultVertexCap);

// Closed-form imbalance theorem_partition reaches, without enumerating anything.
BigInt theorem_construction_imbalance(int m, int d, int n);

// Large induced subgraph of H(n,m) with max degree <= d.
VertexSet low_degree_subgraph(int m, int n, int d, std::uint64_t cap = kDefaultVertexCap);

// Size low_degree_subgraph produces, in closed form.
BigInt low_degree_subgraph_size(int m, int n, int d);

}  // namespace hamsense
