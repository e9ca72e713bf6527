#include "hamsense/hamming.hpp"

#include <algorithm>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense {

GraphParams::GraphParams(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw InvalidInput("alphabet size m must be >= 1, got " + std::to_string(m));
  if (n < 1) throw InvalidInput("dimension n must be >= 1, got " + std::to_string(n));
  vertex_count_ = big_pow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
}

std::uint64_t GraphParams::enumerable_count(std::uint64_t cap) const {
  if (vertex_count_ > cap) {
    throw ResourceLimit("H(" + std::to_string(n_) + "," + std::to_string(m_) + ") has " +
                        vertex_count_.str() + " vertices, above the enumeration cap of " +
                        std::to_string(cap));
  }
  return vertex_count_.convert_to<std::uint64_t>();
}

BigInt GraphParams::balanced_part_size() const {
  return big_pow(static_cast<std::uint64_t>(m_), static_cast<std::uint64_t>(n_ - 1));
}

void Vertex::validate(const GraphParams& p) const {
  if (digits_.size() != static_cast<std::size_t>(p.n())) {
    throw InvalidInput("vertex has " + std::to_string(digits_.size()) + " digits, expected " +
                       std::to_string(p.n()));
  }
  for (int d : digits_) {
    if (d < 0 || d >= p.m()) {
      throw InvalidInput("digit " + std::to_string(d) + " outside {0.." + std::to_string(p.m() - 1) + "}");
    }
  }
}

Rank rank(const Vertex& v, const GraphParams& p) {
  v.validate(p);
  to_u64(p.vertex_count(), "vertex count");
  Rank r = 0;
  for (int d : v.digits()) r = r * static_cast<Rank>(p.m()) + static_cast<Rank>(d);
  return r;
}

Vertex unrank(Rank r, const GraphParams& p) {
  if (BigInt(r) >= p.vertex_count()) {
    throw InvalidInput("rank " + std::to_string(r) + " out of range for " + p.vertex_count().str() +
                       " vertices");
  }
  std::vector<int> digits(static_cast<std::size_t>(p.n()));
  const auto m = static_cast<Rank>(p.m());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    *it = static_cast<int>(r % m);
    r /= m;
  }
  return Vertex(std::move(digits));
}

std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& p) {
  v.validate(p);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.m() - 1) * static_cast<std::size_t>(p.n()));
  std::vector<int> digits(v.digits().begin(), v.digits().end());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int original = digits[i];
    for (int value = 0; value < p.m(); ++value) {
      if (value == original) continue;
      digits[i] = value;
      out.emplace_back(digits);
    }
    digits[i] = original;
  }
  return out;
}

int hamming_distance(const Vertex& x, const Vertex& y) {
  if (x.size() != y.size()) {
    throw InvalidInput("hamming_distance: length mismatch (" + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()) + ")");
  }
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i] ? 1 : 0;
  return d;
}

RankSpace::RankSpace(const GraphParams& p, std::uint64_t cap)
    : params_(p), size_(p.enumerable_count(cap)), weights_(static_cast<std::size_t>(p.n())) {
  std::uint64_t w = 1;
  for (int i = p.n() - 1; i >= 0; --i) {
    weights_[static_cast<std::size_t>(i)] = w;
    w *= static_cast<std::uint64_t>(p.m());
  }
}

VertexSet::VertexSet(const GraphParams& p, std::uint64_t cap)
    : params_(p), membership_(p.enumerable_count(cap), 0) {}

VertexSet VertexSet::from_ranks(const GraphParams& p, std::span<const Rank> ranks, std::uint64_t cap) {
  VertexSet s(p, cap);
  for (Rank r : ranks) {
    if (r >= s.universe_size()) {
      throw InvalidInput("rank " + std::to_string(r) + " out of range for " + p.vertex_count().str() +
                         " vertices");
    }
    s.insert(r);
  }
  return s;
}

VertexSet VertexSet::full(const GraphParams& p, std::uint64_t cap) {
  VertexSet s(p, cap);
  std::fill(s.membership_.begin(), s.membership_.end(), std::uint8_t{1});
  s.size_ = s.membership_.size();
  return s;
}

void VertexSet::insert(Rank r) {
  if (r >= membership_.size()) throw InvalidInput("rank " + std::to_string(r) + " out of range");
  if (!membership_[r]) {
    membership_[r] = 1;
    ++size_;
  }
}

void VertexSet::erase(Rank r) {
  if (r < membership_.size() && membership_[r]) {
    membership_[r] = 0;
    --size_;
  }
}

std::vector<Rank> VertexSet::ranks() const {
  std::vector<Rank> out;
  out.reserve(size_);
  for (Rank r = 0; r < membership_.size(); ++r) {
    if (membership_[r]) out.push_back(r);
  }
  return out;
}

DegreeWitness induced_max_degree_witness(const VertexSet& s) {
  const RankSpace space(s.params(), s.universe_size());
  DegreeWitness best;
  for (Rank r = 0; r < space.size(); ++r) {
    if (!s.contains(r)) continue;
    int deg = 0;
    space.for_each_neighbor(r, [&](Rank u) { deg += s.contains(u) ? 1 : 0; });
    if (!best.vertex || deg > best.degree) {
      best.degree = deg;
      best.vertex = r;
    }
  }
  return best;
}

int induced_max_degree(const VertexSet& s) { return induced_max_degree_witness(s).degree; }

BigInt independence_number(const GraphParams& p) { return p.balanced_part_size(); }

}  // namespace hamsense
