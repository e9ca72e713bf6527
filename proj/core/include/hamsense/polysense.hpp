#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hamsense/grid_poly.hpp"
#include "hamsense/hamming.hpp"

namespace hamsense {

using ValueIndex = std::uint32_t;

inline constexpr std::uint64_t kDefaultNeighborCheckCap = 1'000'000'000;

// f: A^n -> B as a value table. Entry r holds the index into B of f at the
// point whose big-endian rank over positions in A is r.
class FiniteFunction {
 public:
  FiniteFunction(std::vector<Rational> domain, std::vector<Rational> range, int arity,
                 std::vector<ValueIndex> values);

  // Tabulates fn(point digits) -> index into range.
  static FiniteFunction tabulate(std::vector<Rational> domain, std::vector<Rational> range, int arity,
                                 const std::function<ValueIndex(std::span<const int>)>& fn,
                                 std::uint64_t cap = kDefaultVertexCap);

  const std::vector<Rational>& domain() const { return domain_; }
  const std::vector<Rational>& range() const { return range_; }
  int arity() const { return arity_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }
  GraphParams params() const { return GraphParams(domain_size(), arity_); }
  const std::vector<ValueIndex>& values() const { return values_; }
  ValueIndex value_index(Rank r) const { return values_[r]; }
  const Rational& value(Rank r) const { return range_[values_[r]]; }
  bool is_constant() const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

 private:
  std::vector<Rational> domain_;
  std::vector<Rational> range_;
  int arity_;
  std::vector<ValueIndex> values_;
};

// {0, 1, ..., m-1}
std::vector<Rational> integer_domain(int m);

GridPolynomial interpolate(const FiniteFunction& f, std::uint64_t cap = kDefaultVertexCap);
int degree(const FiniteFunction& f, std::uint64_t cap = kDefaultVertexCap);

struct SensitivityResult {
  int sensitivity = 0;
  Vertex witness;  // smallest-rank point attaining the maximum
};

SensitivityResult sensitivity(const FiniteFunction& f, std::uint64_t neighbor_check_cap = kDefaultNeighborCheckCap);
int local_sensitivity(const FiniteFunction& f, const Vertex& x);

// One 0/1-valued f_b = [f(x) = b] per element of B, in B order.
std::vector<FiniteFunction> indicator_decomposition(const FiniteFunction& f);

struct RestrictionWitness {
  std::size_t range_index;  // b, as an index into B
  Rational range_value;
  int function_degree;      // deg f
  int indicator_degree;     // deg f_b
  int target_support;       // D = ceil(deg f / (m-1))
  // Retained pair per coordinate; the first maps to 0 and the second to 1 in `restricted`.
  std::vector<std::pair<Rational, Rational>> retained;
  FiniteFunction restricted;  // Boolean g on {0,1}^n
  int restricted_degree;
  int restricted_sensitivity;
  int function_sensitivity;
};

// Reduces f to a Boolean function of degree >= ceil(deg f/(m-1)) and sensitivity
// <= s(f) by keeping two values per coordinate. Throws InvalidInput for constant
// f or |A| < 2, InvariantViolation if no value pair keeps a wide enough monomial.
RestrictionWitness boolean_restriction_witness(const FiniteFunction& f, std::uint64_t cap = kDefaultVertexCap);

struct SensitivityBoundReport {
  int sensitivity = 0;
  int degree = 0;
  int domain_size = 0;
  bool holds = false;            // s^2 (m-1) >= deg, in integers
  std::optional<double> ratio;   // s / sqrt(deg/(m-1)); empty when deg = 0
  Vertex witness;
};

SensitivityBoundReport verify_sensitivity_bound(const FiniteFunction& f, std::uint64_t cap = kDefaultVertexCap);

// Tribes value on Boolean inputs, with the complement applied to every
// coordinate outside the first block so that the all-ones point is maximally sensitive.
ValueIndex tribes_value(int s, std::span<const int> bits);

FiniteFunction tribes(int s, std::uint64_t cap = kDefaultVertexCap);

// F(x) = tribes_s([x_1 = a], ..., [x_n = a]); evaluates pointwise without a table.
class LiftedTribes {
 public:
  LiftedTribes(std::vector<Rational> domain, const Rational& a, int s);

  int arity() const { return s_ * s_; }
  const std::vector<Rational>& domain() const { return domain_; }
  std::size_t marked_index() const { return marked_; }
  ValueIndex operator()(std::span<const int> point) const;
  FiniteFunction table(std::uint64_t cap = kDefaultVertexCap) const;

 private:
  std::vector<Rational> domain_;
  std::size_t marked_;
  int s_;
};

FiniteFunction lifted_tribes(std::vector<Rational> domain, const Rational& a, int s,
                             std::uint64_t cap = kDefaultVertexCap);

}  // namespace hamsense
