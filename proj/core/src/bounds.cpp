#include "hamsense/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "hamsense/errors.hpp"

namespace hamsense {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "N/A";
    case Verdict::Info: return "INFO";
    case Verdict::Flag: return "FLAG";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string format_decimal(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", value);
  return buf;
}

namespace {

BigInt pow_m(int m, int e) { return big_pow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(e)); }

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

}  // namespace

ImbalanceBound theorem_imbalance_bound(int m, int d, int n) {
  if (m < 3 || d < 1 || n < 1) {
    throw InvalidInput("theorem bound needs m >= 3, d >= 1, n >= 1");
  }
  ImbalanceBound out{ImbalanceCase::LargeDegree, 0, theorem_construction_imbalance(m, d, n)};
  if (d < n) {
    const BigInt power = pow_m(m, (n * (d - 1)) / d);
    out.which = m % 2 == 0 ? ImbalanceCase::EvenSmallDegree : ImbalanceCase::OddSmallDegree;
    out.closed_form = Rational(BigInt(m % 2 == 0 ? m - 2 : m - 1) * power);
  } else {
    const int q = d / n;
    out.closed_form = Rational(2 * pow_m(m, n) * q, BigInt(q + 1));
  }
  return out;
}

Rational subgraph_excess(int m, int n, const BigInt& subgraph_size) {
  return Rational(subgraph_size, pow_m(m, n)) - Rational(1, m);
}

Rational markov_degree_lower_bound(int m, int n, const BigInt& subgraph_size) {
  if (m < 2 || n < 1) throw InvalidInput("markov bound needs m >= 2, n >= 1");
  const Rational eps = subgraph_excess(m, n, subgraph_size);
  if (eps <= 0) {
    throw BoundNotApplicable("markov bound needs |S| > m^(n-1); got |S| = " + subgraph_size.str());
  }
  return Rational(2 * n) * eps / (Rational(m - 1) * (Rational(1, m) + eps));
}

namespace {

void check_upper_bound_range(int m, int n, const Rational& eps) {
  if (m < 3 || n < 1) throw InvalidInput("construction upper bound needs m >= 3, n >= 1");
  if (eps <= 0 || eps > Rational(m - 1, m)) {
    throw InvalidInput("construction upper bound needs 0 < eps <= (m-1)/m, got eps = " + format_rational(eps));
  }
}

}  // namespace

double construction_degree_upper_bound(int m, int n, const Rational& eps) {
  check_upper_bound_range(m, n, eps);
  if (eps < Rational(1, m)) {
    return static_cast<double>(n) * std::log(static_cast<double>(m)) / std::log(1.0 / to_double(eps));
  }
  return static_cast<double>(ceil_of(eps * m).convert_to<long long>() * n);
}

bool within_construction_degree_upper_bound(int m, int n, const Rational& eps, int degree) {
  check_upper_bound_range(m, n, eps);
  if (degree < 0) return true;
  if (eps < Rational(1, m)) {
    // degree <= n / log_m(1/eps)  <=>  (1/eps)^degree <= m^n
    return rational_pow(1 / eps, static_cast<std::uint64_t>(degree)) <= Rational(pow_m(m, n));
  }
  return BigInt(degree) <= ceil_of(eps * m) * n;
}

double cayley_degree_bound(int m, int n) {
  if (m < 3 || n < 1) throw InvalidInput("cayley bound needs m >= 3, n >= 1");
  return std::sqrt(static_cast<double>(m - 1) * n / 2.0);
}

bool meets_cayley_degree_bound(int m, int n, int degree) {
  if (m < 3 || n < 1) throw InvalidInput("cayley bound needs m >= 3, n >= 1");
  return 2LL * degree * degree >= static_cast<long long>(m - 1) * n;
}

DominationThreshold domination_threshold(int m, int n) {
  if (m < 2 || n < 1) throw InvalidInput("domination threshold needs m >= 2, n >= 1");
  const BigInt total = pow_m(m, n);
  Rational removed(total, BigInt((m - 1) * n + 1));
  if (n > 1) removed = std::max(removed, Rational(pow_m(m, n - 1), BigInt(n - 1)));
  return DominationThreshold{Rational(total) - removed, (m - 1) * n};
}

MeasuredSubgraph measure(const VertexSet& s, std::string label) {
  return MeasuredSubgraph{s.params(), BigInt(s.size()), induced_max_degree(s), std::nullopt, std::nullopt,
                          std::move(label)};
}

namespace {

void append_lower_bounds(std::vector<BoundsReport>& out, const GraphParams& p, const BigInt& size, int degree,
                         const std::string& label) {
  const int m = p.m();
  const int n = p.n();
  const std::string measured = std::to_string(degree);
  const std::string size_str = size.str();

  if (m >= 2) {
    BoundsReport r{"markov-lower", m, n, size_str, "", measured, Verdict::NotApplicable, label};
    const Rational eps = subgraph_excess(m, n, size);
    if (eps > 0) {
      const Rational bound = markov_degree_lower_bound(m, n, size);
      r.value = format_rational(bound);
      r.verdict = verdict_of(Rational(degree) >= bound);
    } else {
      r.value = "-";
    }
    out.push_back(std::move(r));
  }

  if (m >= 3) {
    BoundsReport r{"cayley-lower", m, n, size_str, format_decimal(cayley_degree_bound(m, n)), measured,
                   Verdict::NotApplicable, label};
    if (2 * size > p.vertex_count()) r.verdict = verdict_of(meets_cayley_degree_bound(m, n, degree));
    out.push_back(std::move(r));
  }

  if (m >= 2) {
    const DominationThreshold dom = domination_threshold(m, n);
    BoundsReport r{"domination-lower", m, n, size_str, std::to_string(dom.implied_degree), measured,
                   Verdict::NotApplicable, label};
    r.note = (label.empty() ? "" : label + "; ") + "threshold " + format_rational(dom.threshold);
    if (Rational(size) > dom.threshold) r.verdict = verdict_of(degree >= dom.implied_degree);
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<BoundsReport> consistency_check(const MeasuredSubgraph& measured) {
  std::vector<BoundsReport> out;
  const GraphParams& p = measured.params;
  append_lower_bounds(out, p, measured.size, measured.max_degree, measured.label);

  const Rational eps = subgraph_excess(p.m(), p.n(), measured.size);
  if (p.m() >= 3 && eps > 0 && eps <= Rational(p.m() - 1, p.m())) {
    // Existence claim for some subgraph of this size, not a guarantee about this one.
    out.push_back(BoundsReport{"existence-upper", p.m(), p.n(), format_rational(eps),
                               format_decimal(construction_degree_upper_bound(p.m(), p.n(), eps)),
                               std::to_string(measured.max_degree), Verdict::Info, measured.label});
  }
  if (measured.claimed_size) {
    out.push_back(BoundsReport{"construction-size", p.m(), p.n(), measured.size.str(), measured.claimed_size->str(),
                               measured.size.str(), verdict_of(measured.size == *measured.claimed_size),
                               measured.label});
  }
  if (measured.claimed_degree) {
    out.push_back(BoundsReport{"construction-degree", p.m(), p.n(), std::to_string(*measured.claimed_degree),
                               std::to_string(*measured.claimed_degree), std::to_string(measured.max_degree),
                               verdict_of(measured.max_degree <= *measured.claimed_degree), measured.label});
  }
  return out;
}

std::vector<BoundsReport> consistency_check(const GraphParams& params, const PartitionMetrics& metrics,
                                            std::optional<int> claimed_degree,
                                            std::optional<BigInt> claimed_imbalance) {
  std::vector<BoundsReport> out;
  const int m = params.m();
  const int n = params.n();

  BigInt total = 0;
  for (std::uint64_t s : metrics.part_sizes) total += s;
  const bool sizes_ok = metrics.part_sizes.size() == static_cast<std::size_t>(m) && total == params.vertex_count();
  out.push_back(BoundsReport{"partition-total", m, n, "-", params.vertex_count().str(), total.str(),
                             verdict_of(sizes_ok), ""});
  const BigInt recount = imbalance_of(params, metrics.part_sizes);
  out.push_back(BoundsReport{"imbalance-recount", m, n, "-", recount.str(), metrics.imbalance.str(),
                             verdict_of(recount == metrics.imbalance), ""});

  for (std::size_t i = 0; i < metrics.part_sizes.size(); ++i) {
    append_lower_bounds(out, params, BigInt(metrics.part_sizes[i]), metrics.max_degree,
                        "part " + std::to_string(i));
  }
  if (claimed_degree) {
    out.push_back(BoundsReport{"construction-degree", m, n, std::to_string(*claimed_degree),
                               std::to_string(*claimed_degree), std::to_string(metrics.max_degree),
                               verdict_of(metrics.max_degree <= *claimed_degree), ""});
  }
  if (claimed_imbalance) {
    out.push_back(BoundsReport{"construction-imbalance", m, n, "-", claimed_imbalance->str(),
                               metrics.imbalance.str(), verdict_of(metrics.imbalance == *claimed_imbalance), ""});
  }
  return out;
}

bool any_failed(const std::vector<BoundsReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return true;
  }
  return false;
}

std::vector<BoundsReport> evaluate_bounds(int m, int n, std::optional<int> d, std::optional<Rational> eps,
                                          std::optional<BigInt> subgraph_size) {
  const GraphParams params(m, n);
  std::vector<BoundsReport> out;
  if (d && m >= 3) {
    const ImbalanceBound b = theorem_imbalance_bound(m, *d, n);
    BoundsReport r{"theorem-imbalance", m, n, std::to_string(*d), format_rational(b.closed_form),
                   b.construction_bound.str(), b.gap() ? Verdict::Flag : Verdict::Info, ""};
    if (b.gap()) r.note = "construction below closed form (divisibility gap)";
    out.push_back(std::move(r));
  }
  if (d && m >= 3 && *d >= 1 && *d <= (m - 1) * n) {
    out.push_back(BoundsReport{"subgraph-size", m, n, std::to_string(*d),
                               low_degree_subgraph_size(m, n, *d).str(), std::nullopt, Verdict::Info, ""});
  }
  if (subgraph_size && m >= 2) {
    BoundsReport r{"markov-lower", m, n, subgraph_size->str(), "-", std::nullopt, Verdict::NotApplicable, ""};
    if (subgraph_excess(m, n, *subgraph_size) > 0) {
      r.value = format_rational(markov_degree_lower_bound(m, n, *subgraph_size));
      r.verdict = Verdict::Info;
    }
    out.push_back(std::move(r));
  }
  if (eps && m >= 2) {
    const BigInt size = ceil_of((Rational(1, m) + *eps) * Rational(params.vertex_count()));
    BoundsReport r{"markov-lower", m, n, format_rational(*eps), "-", std::nullopt, Verdict::NotApplicable, ""};
    if (*eps > 0) {
      const Rational eps_value = *eps;
      r.value = format_rational(Rational(2 * n) * eps_value / (Rational(m - 1) * (Rational(1, m) + eps_value)));
      r.verdict = Verdict::Info;
      r.note = "|S| >= " + size.str();
    }
    out.push_back(std::move(r));
  }
  if (eps && m >= 3) {
    BoundsReport r{"existence-upper", m, n, format_rational(*eps), "-", std::nullopt, Verdict::NotApplicable, ""};
    if (*eps > 0 && *eps <= Rational(m - 1, m)) {
      r.value = format_decimal(construction_degree_upper_bound(m, n, *eps));
      r.verdict = Verdict::Info;
    }
    out.push_back(std::move(r));
  }
  if (m >= 3) {
    out.push_back(BoundsReport{"cayley-lower", m, n, "-", format_decimal(cayley_degree_bound(m, n)), std::nullopt,
                               Verdict::Info, "|S| > m^n/2"});
  }
  if (m >= 2) {
    const DominationThreshold dom = domination_threshold(m, n);
    out.push_back(BoundsReport{"domination-lower", m, n, "-", std::to_string(dom.implied_degree), std::nullopt,
                               Verdict::Info, "|S| > " + format_rational(dom.threshold)});
  }
  out.push_back(BoundsReport{"independence-number", m, n, "-", independence_number(params).str(), std::nullopt,
                             Verdict::Info, ""});
  return out;
}

void write_records(std::ostream& out, const std::vector<BoundsReport>& reports) {
  for (const auto& r : reports) {
    nlohmann::json j{{"bound", r.bound},     {"m", r.m},         {"n", r.n},
                     {"d_or_eps", r.parameter}, {"value", r.value}, {"verdict", to_string(r.verdict)}};
    j["measured"] = r.measured ? nlohmann::json(*r.measured) : nlohmann::json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump() << '\n';
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BoundsReport>& reports) {
  out << "bound,m,n,d_or_eps,value,measured,verdict\n";
  for (const auto& r : reports) {
    out << csv_field(r.bound) << ',' << r.m << ',' << r.n << ',' << csv_field(r.parameter) << ','
        << csv_field(r.value) << ',' << csv_field(r.measured.value_or("")) << ',' << to_string(r.verdict) << '\n';
  }
}

}  // namespace hamsense
