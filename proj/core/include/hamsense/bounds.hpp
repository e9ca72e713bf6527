#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamsense/hamming.hpp"
#include "hamsense/numeric.hpp"
#include "hamsense/partition.hpp"

namespace hamsense {

enum class Verdict { Pass, Fail, NotApplicable, Info, Flag, Skipped };

std::string to_string(Verdict v);

// One evaluated bound. `value` is exact ("p/q" or integer) when the bound is
// rational, otherwise a decimal with 10 fractional digits.
struct BoundsReport {
  std::string bound;
  int m = 0;
  int n = 0;
  std::string parameter;  // d, eps or |S| depending on the bound
  std::string value;
  std::optional<std::string> measured;
  Verdict verdict = Verdict::Info;
  std::string note;
};

enum class ImbalanceCase { EvenSmallDegree, OddSmallDegree, LargeDegree };

struct ImbalanceBound {
  ImbalanceCase which;
  Rational closed_form;
  BigInt construction_bound;
  // Construction falls short of the closed form (only possible for d >= n).
  bool gap() const { return Rational(construction_bound) < closed_form; }
};

ImbalanceBound theorem_imbalance_bound(int m, int d, int n);

// eps = |S|/m^n - 1/m.
Rational subgraph_excess(int m, int n, const BigInt& subgraph_size);

// 2 eps n / ((m-1)(1/m + eps)). Throws BoundNotApplicable when eps <= 0.
Rational markov_degree_lower_bound(int m, int n, const BigInt& subgraph_size);

// n / log_m(1/eps) for eps < 1/m, ceil(eps m) n for 1/m <= eps <= (m-1)/m.
double construction_degree_upper_bound(int m, int n, const Rational& eps);
// Exact test of degree <= construction_degree_upper_bound(m, n, eps).
bool within_construction_degree_upper_bound(int m, int n, const Rational& eps, int degree);

double cayley_degree_bound(int m, int n);
// Exact test of degree >= sqrt((m-1)n/2), i.e. 2 degree^2 >= (m-1)n.
bool meets_cayley_degree_bound(int m, int n, int degree);

struct DominationThreshold {
  Rational threshold;
  int implied_degree = 0;
};

// Subgraphs on more than `threshold` vertices have max degree (m-1)n.
DominationThreshold domination_threshold(int m, int n);

// Stats of one measured induced subgraph, with the construction's own claims if any.
struct MeasuredSubgraph {
  GraphParams params;
  BigInt size;
  int max_degree = 0;
  std::optional<BigInt> claimed_size;
  std::optional<int> claimed_degree;
  std::string label;
};

MeasuredSubgraph measure(const VertexSet& s, std::string label = {});

std::vector<BoundsReport> consistency_check(const MeasuredSubgraph& measured);

// Lower bounds are checked part by part against Delta(partition).
std::vector<BoundsReport> consistency_check(const GraphParams& params, const PartitionMetrics& metrics,
                                            std::optional<int> claimed_degree = std::nullopt,
                                            std::optional<BigInt> claimed_imbalance = std::nullopt);

bool any_failed(const std::vector<BoundsReport>& reports);

// Every bound formula evaluated for the given parameters (no measurement).
std::vector<BoundsReport> evaluate_bounds(int m, int n, std::optional<int> d, std::optional<Rational> eps,
                                          std::optional<BigInt> subgraph_size);

// Line-delimited JSON records and CSV with the header
// bound,m,n,d_or_eps,value,measured,verdict
void write_records(std::ostream& out, const std::vector<BoundsReport>& reports);
void write_csv(std::ostream& out, const std::vector<BoundsReport>& reports);

std::string format_decimal(double value);

}  // namespace hamsense
