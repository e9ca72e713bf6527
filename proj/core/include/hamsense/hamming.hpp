#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hamsense/numeric.hpp"

namespace hamsense {

using Rank = std::uint64_t;

inline constexpr std::uint64_t kDefaultVertexCap = 10'000'000;

// Parameters of the Hamming graph H(n, m): words of length n over {0..m-1}.
class GraphParams {
 public:
  GraphParams(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const BigInt& vertex_count() const { return vertex_count_; }

  // m^n as a machine integer, or ResourceLimit if it exceeds the cap.
  std::uint64_t enumerable_count(std::uint64_t cap = kDefaultVertexCap) const;

  // m^(n-1), the size of every part of a balanced partition.
  BigInt balanced_part_size() const;

  friend bool operator==(const GraphParams& a, const GraphParams& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  int m_;
  int n_;
  BigInt vertex_count_;
};

class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> digits) : digits_(std::move(digits)) {}

  std::span<const int> digits() const { return digits_; }
  int operator[](std::size_t i) const { return digits_[i]; }
  std::size_t size() const { return digits_.size(); }

  // Throws InvalidInput unless the word has length n and every digit < m.
  void validate(const GraphParams& p) const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> digits_;
};

// Big-endian mixed-radix encoding: leftmost digit most significant.
Rank rank(const Vertex& v, const GraphParams& p);
Vertex unrank(Rank r, const GraphParams& p);

// Coordinate-major, value-ascending. Exactly (m-1)n vertices.
std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& p);

int hamming_distance(const Vertex& x, const Vertex& y);

// Rank arithmetic for enumeration. Requires m^n to fit in 64 bits.
class RankSpace {
 public:
  explicit RankSpace(const GraphParams& p, std::uint64_t cap = kDefaultVertexCap);

  const GraphParams& params() const { return params_; }
  std::uint64_t size() const { return size_; }
  // m^(n-1-i): weight of coordinate i.
  std::uint64_t weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int digit(Rank r, int i) const {
    return static_cast<int>((r / weights_[static_cast<std::size_t>(i)]) % static_cast<std::uint64_t>(params_.m()));
  }

  // Calls fn(neighbor_rank) in the same order as neighbors().
  template <typename Fn>
  void for_each_neighbor(Rank r, Fn&& fn) const {
    const auto m = static_cast<std::uint64_t>(params_.m());
    for (int i = 0; i < params_.n(); ++i) {
      const std::uint64_t w = weights_[static_cast<std::size_t>(i)];
      const std::uint64_t d = (r / w) % m;
      const Rank base = r - d * w;
      for (std::uint64_t v = 0; v < m; ++v) {
        if (v != d) fn(base + v * w);
      }
    }
  }

 private:
  GraphParams params_;
  std::uint64_t size_;
  std::vector<std::uint64_t> weights_;
};

// A subset of V(H(n,m)) held as a membership bitmap over ranks.
class VertexSet {
 public:
  VertexSet(const GraphParams& p, std::uint64_t cap = kDefaultVertexCap);
  static VertexSet from_ranks(const GraphParams& p, std::span<const Rank> ranks,
                              std::uint64_t cap = kDefaultVertexCap);
  static VertexSet full(const GraphParams& p, std::uint64_t cap = kDefaultVertexCap);

  const GraphParams& params() const { return params_; }
  std::uint64_t universe_size() const { return membership_.size(); }
  std::uint64_t size() const { return size_; }
  bool contains(Rank r) const { return r < membership_.size() && membership_[r] != 0; }

  void insert(Rank r);
  void erase(Rank r);

  // Sorted ascending.
  std::vector<Rank> ranks() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  GraphParams params_;
  std::vector<std::uint8_t> membership_;
  std::uint64_t size_ = 0;
};

struct DegreeWitness {
  int degree = 0;
  std::optional<Rank> vertex;  // smallest rank attaining the degree; empty for empty sets
};

int induced_max_degree(const VertexSet& s);
DegreeWitness induced_max_degree_witness(const VertexSet& s);

// alpha(H(n,m)) = m^(n-1).
BigInt independence_number(const GraphParams& p);

}  // namespace hamsense
