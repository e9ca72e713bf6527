#include "hamsense/polysense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense {

namespace {

void require_distinct(const std::vector<Rational>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw InvalidInput(std::string("duplicate element ") + format_rational(xs[i]) + " in " + what);
    }
  }
}

}  // namespace

FiniteFunction::FiniteFunction(std::vector<Rational> domain, std::vector<Rational> range, int arity,
                               std::vector<ValueIndex> values)
    : domain_(std::move(domain)), range_(std::move(range)), arity_(arity), values_(std::move(values)) {
  if (domain_.empty()) throw InvalidInput("function domain A is empty");
  if (range_.empty()) throw InvalidInput("function range B is empty");
  if (arity_ < 1) throw InvalidInput("function arity must be >= 1");
  require_distinct(domain_, "A");
  require_distinct(range_, "B");
  if (BigInt(values_.size()) != params().vertex_count()) {
    throw InvalidInput("value table has " + std::to_string(values_.size()) + " entries, expected " +
                       params().vertex_count().str());
  }
  for (ValueIndex v : values_) {
    if (v >= range_.size()) throw InvalidInput("value index " + std::to_string(v) + " outside B");
  }
}

FiniteFunction FiniteFunction::tabulate(std::vector<Rational> domain, std::vector<Rational> range, int arity,
                                        const std::function<ValueIndex(std::span<const int>)>& fn,
                                        std::uint64_t cap) {
  const GraphParams params(static_cast<int>(domain.size()), arity);
  const std::uint64_t count = params.enumerable_count(cap);
  std::vector<ValueIndex> values(count);
  std::vector<int> digits(static_cast<std::size_t>(arity), 0);
  for (Rank r = 0; r < count; ++r) {
    values[r] = fn(digits);
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < params.m()) break;
      digits[i] = 0;
    }
  }
  return FiniteFunction(std::move(domain), std::move(range), arity, std::move(values));
}

bool FiniteFunction::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](ValueIndex v) { return v == values_.front(); });
}

std::vector<Rational> integer_domain(int m) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.emplace_back(i);
  return out;
}

GridPolynomial interpolate(const FiniteFunction& f, std::uint64_t cap) {
  f.params().enumerable_count(cap);
  std::vector<Rational> table;
  table.reserve(f.values().size());
  for (Rank r = 0; r < f.values().size(); ++r) table.push_back(f.value(r));
  const std::vector<std::vector<Rational>> axes(static_cast<std::size_t>(f.arity()), f.domain());
  return interpolate_on_grid(axes, table);
}

int degree(const FiniteFunction& f, std::uint64_t cap) { return interpolate(f, cap).degree(); }

SensitivityResult sensitivity(const FiniteFunction& f, std::uint64_t neighbor_check_cap) {
  const GraphParams p = f.params();
  const BigInt checks = p.vertex_count() * p.n() * (p.m() - 1);
  if (checks > neighbor_check_cap) {
    throw ResourceLimit("sensitivity needs " + checks.str() + " neighbor checks, above the cap of " +
                        std::to_string(neighbor_check_cap));
  }
  const RankSpace space(p, f.values().size());
  int best = -1;
  Rank witness = 0;
  for (Rank r = 0; r < space.size(); ++r) {
    const ValueIndex own = f.value_index(r);
    int local = 0;
    space.for_each_neighbor(r, [&](Rank u) { local += f.value_index(u) != own ? 1 : 0; });
    if (local > best) {
      best = local;
      witness = r;
    }
  }
  return SensitivityResult{best, unrank(witness, p)};
}

int local_sensitivity(const FiniteFunction& f, const Vertex& x) {
  const GraphParams p = f.params();
  const RankSpace space(p, f.values().size());
  const Rank r = rank(x, p);
  const ValueIndex own = f.value_index(r);
  int local = 0;
  space.for_each_neighbor(r, [&](Rank u) { local += f.value_index(u) != own ? 1 : 0; });
  return local;
}

std::vector<FiniteFunction> indicator_decomposition(const FiniteFunction& f) {
  std::vector<FiniteFunction> out;
  out.reserve(f.range().size());
  for (ValueIndex b = 0; b < f.range().size(); ++b) {
    std::vector<ValueIndex> values(f.values().size());
    for (Rank r = 0; r < values.size(); ++r) values[r] = f.value_index(r) == b ? 1 : 0;
    out.emplace_back(f.domain(), integer_domain(2), f.arity(), std::move(values));
  }
  return out;
}

namespace {

// Values of a 0/1 table on the sub-grid picking domain indices axes[i] per coordinate.
std::vector<Rational> subgrid_values(const std::vector<ValueIndex>& table, const RankSpace& space,
                                     const std::vector<std::vector<std::size_t>>& axes) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  std::vector<Rational> out;
  out.reserve(total);
  std::vector<std::size_t> pos(axes.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Rank r = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) r += axes[i][pos[i]] * space.weight(static_cast<int>(i));
    out.emplace_back(table[r]);
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++pos[i] < axes[i].size()) break;
      pos[i] = 0;
    }
  }
  return out;
}

std::vector<std::vector<Rational>> node_values(const std::vector<Rational>& domain,
                                               const std::vector<std::vector<std::size_t>>& axes) {
  std::vector<std::vector<Rational>> out;
  out.reserve(axes.size());
  for (const auto& axis : axes) {
    std::vector<Rational> nodes;
    for (std::size_t i : axis) nodes.push_back(domain[i]);
    out.push_back(std::move(nodes));
  }
  return out;
}

}  // namespace

RestrictionWitness boolean_restriction_witness(const FiniteFunction& f, std::uint64_t cap) {
  const int m = f.domain_size();
  if (m < 2) throw InvalidInput("restriction needs |A| >= 2");
  const int deg = degree(f, cap);
  if (deg < 1) throw InvalidInput("restriction needs a non-constant function (degree >= 1)");

  const auto parts = indicator_decomposition(f);
  std::size_t chosen = 0;
  int chosen_degree = -1;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const int d = degree(parts[b], cap);
    if (d > chosen_degree) {
      chosen_degree = d;
      chosen = b;
    }
  }
  if (chosen_degree < deg) {
    throw InvariantViolation("no indicator has degree >= deg f = " + std::to_string(deg));
  }
  const int target = (deg + m - 2) / (m - 1);
  const FiniteFunction& fb = parts[chosen];
  const RankSpace space(f.params(), fb.values().size());

  std::vector<std::vector<std::size_t>> axes(static_cast<std::size_t>(f.arity()));
  for (auto& axis : axes) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) axis.push_back(i);
  }

  for (std::size_t coord = 0; coord < axes.size(); ++coord) {
    if (axes[coord].size() <= 2) continue;
    bool found = false;
    for (std::size_t s = 0; s < static_cast<std::size_t>(m) && !found; ++s) {
      for (std::size_t t = s + 1; t < static_cast<std::size_t>(m) && !found; ++t) {
        auto candidate = axes;
        candidate[coord] = {s, t};
        const GridPolynomial p =
            interpolate_on_grid(node_values(f.domain(), candidate), subgrid_values(fb.values(), space, candidate));
        if (p.max_support() >= target) {
          axes = std::move(candidate);
          found = true;
        }
      }
    }
    if (!found) {
      throw InvariantViolation("no value pair on coordinate " + std::to_string(coord) +
                               " keeps a monomial with support >= " + std::to_string(target));
    }
  }

  const std::vector<Rational> restricted_values = subgrid_values(fb.values(), space, axes);
  std::vector<ValueIndex> bits(restricted_values.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = restricted_values[i] == 0 ? 0 : 1;
  FiniteFunction restricted(integer_domain(2), integer_domain(2), f.arity(), std::move(bits));

  std::vector<std::pair<Rational, Rational>> retained;
  for (const auto& axis : axes) retained.emplace_back(f.domain()[axis[0]], f.domain()[axis[1]]);

  const int restricted_degree = degree(restricted, cap);
  const int restricted_sensitivity = sensitivity(restricted).sensitivity;
  RestrictionWitness w{chosen,
                       f.range()[chosen],
                       deg,
                       chosen_degree,
                       target,
                       std::move(retained),
                       std::move(restricted),
                       restricted_degree,
                       restricted_sensitivity,
                       sensitivity(f).sensitivity};

  if (w.restricted_degree < target) {
    throw InvariantViolation("restricted degree " + std::to_string(w.restricted_degree) + " below D = " +
                             std::to_string(target));
  }
  if (w.restricted_sensitivity > w.function_sensitivity) {
    throw InvariantViolation("restriction increased sensitivity");
  }
  return w;
}

SensitivityBoundReport verify_sensitivity_bound(const FiniteFunction& f, std::uint64_t cap) {
  const auto sens = sensitivity(f);
  SensitivityBoundReport report;
  report.sensitivity = sens.sensitivity;
  report.witness = sens.witness;
  report.degree = degree(f, cap);
  report.domain_size = f.domain_size();
  const long long s = report.sensitivity;
  report.holds = s * s * (report.domain_size - 1) >= report.degree;
  if (report.degree > 0 && report.domain_size > 1) {
    report.ratio = static_cast<double>(s) / std::sqrt(static_cast<double>(report.degree) / (report.domain_size - 1));
  }
  return report;
}

ValueIndex tribes_value(int s, std::span<const int> bits) {
  for (int block = 0; block < s; ++block) {
    bool all = true;
    for (int j = 0; j < s && all; ++j) {
      const int bit = bits[static_cast<std::size_t>(block * s + j)];
      all = block == 0 ? bit == 1 : bit == 0;
    }
    if (all) return 1;
  }
  return 0;
}

FiniteFunction tribes(int s, std::uint64_t cap) {
  if (s < 1) throw InvalidInput("tribes needs s >= 1");
  return FiniteFunction::tabulate(integer_domain(2), integer_domain(2), s * s,
                                  [s](std::span<const int> bits) { return tribes_value(s, bits); }, cap);
}

LiftedTribes::LiftedTribes(std::vector<Rational> domain, const Rational& a, int s)
    : domain_(std::move(domain)), s_(s) {
  if (domain_.size() < 2) throw InvalidInput("lifted tribes needs |A| >= 2");
  if (s < 1) throw InvalidInput("lifted tribes needs s >= 1");
  require_distinct(domain_, "A");
  const auto it = std::find(domain_.begin(), domain_.end(), a);
  if (it == domain_.end()) throw InvalidInput("marked value " + format_rational(a) + " is not in A");
  marked_ = static_cast<std::size_t>(it - domain_.begin());
}

ValueIndex LiftedTribes::operator()(std::span<const int> point) const {
  std::vector<int> bits(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) bits[i] = static_cast<std::size_t>(point[i]) == marked_ ? 1 : 0;
  return tribes_value(s_, bits);
}

FiniteFunction LiftedTribes::table(std::uint64_t cap) const {
  return FiniteFunction::tabulate(domain_, integer_domain(2), arity(),
                                  [this](std::span<const int> point) { return (*this)(point); }, cap);
}

FiniteFunction lifted_tribes(std::vector<Rational> domain, const Rational& a, int s, std::uint64_t cap) {
  return LiftedTribes(std::move(domain), a, s).table(cap);
}

}  // namespace hamsense
