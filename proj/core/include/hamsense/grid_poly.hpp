#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hamsense/numeric.hpp"

namespace hamsense {

using Exponents = std::vector<int>;

// Polynomial with exact rational coefficients; zero coefficients are never stored.
class GridPolynomial {
 public:
  GridPolynomial() = default;
  GridPolynomial(int variables, std::map<Exponents, Rational> terms);

  int variables() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Max total degree; 0 for the zero polynomial.
  int degree() const;
  // Max number of variables appearing in a single monomial.
  int max_support() const;
  int individual_degree(int variable) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Ordered by total degree, then lexicographically by exponents.
  std::vector<std::pair<Exponents, Rational>> sorted_terms() const;

  friend bool operator==(const GridPolynomial&, const GridPolynomial&) = default;

 private:
  int variables_ = 0;
  std::map<Exponents, Rational> terms_;
};

// Coefficients of the Lagrange basis polynomials for `nodes`: row i holds the
// monomial coefficients (ascending powers) of prod_{j != i} (x - a_j)/(a_i - a_j).
std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes);

// Unique polynomial with per-variable degree < |axes[i]| matching `values` on the
// product grid. `values` is in big-endian order over node indices.
GridPolynomial interpolate_on_grid(const std::vector<std::vector<Rational>>& axes,
                                   std::span<const Rational> values);

}  // namespace hamsense
