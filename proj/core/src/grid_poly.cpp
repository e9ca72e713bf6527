#include "hamsense/grid_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hamsense/errors.hpp"

namespace hamsense {

GridPolynomial::GridPolynomial(int variables, std::map<Exponents, Rational> terms) : variables_(variables) {
  for (auto& [exps, coeff] : terms) {
    if (exps.size() != static_cast<std::size_t>(variables)) {
      throw InvalidInput("monomial has " + std::to_string(exps.size()) + " exponents, expected " +
                         std::to_string(variables));
    }
    if (coeff != 0) terms_.emplace(exps, std::move(coeff));
  }
}

namespace {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int support(const Exponents& e) {
  return static_cast<int>(std::count_if(e.begin(), e.end(), [](int x) { return x != 0; }));
}

}  // namespace

int GridPolynomial::degree() const {
  int best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::max(best, total_degree(exps));
  return best;
}

int GridPolynomial::max_support() const {
  int best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::max(best, support(exps));
  return best;
}

int GridPolynomial::individual_degree(int variable) const {
  int best = 0;
  for (const auto& [exps, coeff] : terms_) best = std::max(best, exps[static_cast<std::size_t>(variable)]);
  return best;
}

Rational GridPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(variables_)) {
    throw InvalidInput("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                       std::to_string(variables_));
  }
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].push_back(Rational(1));
    for (int e = individual_degree(static_cast<int>(i)); e > 0; --e) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) term *= powers[i][static_cast<std::size_t>(exps[i])];
    }
    sum += term;
  }
  return sum;
}

std::vector<std::pair<Exponents, Rational>> GridPolynomial::sorted_terms() const {
  std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return out;
}

std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes) {
  const std::size_t k = nodes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (nodes[i] == nodes[j]) throw InvalidInput("duplicate interpolation node " + format_rational(nodes[i]));
    }
  }
  // prod_j (x - a_j), ascending coefficients; each basis row is this divided by
  // (x - a_i) and scaled by 1 / prod_{j != i} (a_i - a_j).
  std::vector<Rational> master{Rational(1)};
  for (const auto& a : nodes) {
    std::vector<Rational> next(master.size() + 1, Rational(0));
    for (std::size_t e = 0; e < master.size(); ++e) {
      next[e + 1] += master[e];
      next[e] -= a * master[e];
    }
    master = std::move(next);
  }
  std::vector<std::vector<Rational>> basis(k, std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> quotient(k);
  for (std::size_t i = 0; i < k; ++i) {
    quotient[k - 1] = master[k];
    for (std::size_t e = k - 1; e > 0; --e) quotient[e - 1] = master[e] + nodes[i] * quotient[e];
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) denom *= nodes[i] - nodes[j];
    }
    for (std::size_t e = 0; e < k; ++e) basis[i][e] = quotient[e] / denom;
  }
  return basis;
}

GridPolynomial interpolate_on_grid(const std::vector<std::vector<Rational>>& axes, std::span<const Rational> values) {
  std::size_t total = 1;
  for (const auto& axis : axes) {
    if (axis.empty()) throw InvalidInput("interpolation axis with no nodes");
    total *= axis.size();
  }
  if (values.size() != total) {
    throw InvalidInput("value table has " + std::to_string(values.size()) + " entries, grid has " +
                       std::to_string(total));
  }
  std::vector<Rational> table(values.begin(), values.end());
  std::vector<Rational> line;
  std::vector<Rational> coeffs;

  // Axis by axis, replace node values along each line by monomial coefficients.
  std::size_t stride = total;
  for (const auto& axis : axes) {
    const std::size_t k = axis.size();
    stride /= k;
    if (k == 1) continue;  // the lone basis polynomial is the constant 1
    const auto basis = lagrange_basis(axis);
    line.assign(k, Rational(0));
    coeffs.assign(k, Rational(0));
    for (std::size_t outer = 0; outer < total; outer += stride * k) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = outer + inner;
        bool all_zero = true;
        for (std::size_t p = 0; p < k; ++p) {
          line[p] = table[base + p * stride];
          all_zero = all_zero && line[p] == 0;
        }
        if (all_zero) continue;
        for (std::size_t e = 0; e < k; ++e) coeffs[e] = 0;
        for (std::size_t p = 0; p < k; ++p) {
          if (line[p] == 0) continue;
          for (std::size_t e = 0; e < k; ++e) {
            if (basis[p][e] != 0) coeffs[e] += line[p] * basis[p][e];
          }
        }
        for (std::size_t e = 0; e < k; ++e) table[base + e * stride] = coeffs[e];
      }
    }
  }

  std::map<Exponents, Rational> terms;
  Exponents exps(axes.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (table[idx] != 0) terms.emplace(exps, table[idx]);
    // Advance the mixed-radix exponent counter (last axis fastest).
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++exps[i] < static_cast<int>(axes[i].size())) break;
      exps[i] = 0;
    }
  }
  return GridPolynomial(static_cast<int>(axes.size()), std::move(terms));
}

}  // namespace hamsense
