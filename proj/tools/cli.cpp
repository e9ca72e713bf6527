#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hamsense/bounds.hpp"
#include "hamsense/errors.hpp"
#include "hamsense/hamming.hpp"
#include "hamsense/io.hpp"
#include "hamsense/oracle.hpp"
#include "hamsense/partition.hpp"
#include "hamsense/polysense.hpp"

namespace hamsense::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw InvalidInput(std::string("environment variable ") + name + " is not a positive integer: '" + raw + "'");
  }
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  if (auto v = env_u64("HAMSENSE_CAP_VERTICES")) cfg.cap_vertices = *v;
  if (auto v = env_u64("HAMSENSE_CAP_SUBSETS")) cfg.cap_subsets = *v;
  if (auto v = env_u64("HAMSENSE_CAP_FUNCTIONS")) cfg.cap_functions = *v;
  return cfg;
}

namespace {

// Raised when a checked mathematical claim does not hold.
struct VerificationFailed {
  std::string what;
};

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw InvalidInput("malformed range '" + text + "' (use 'a..b' or 'a,b,c')");
  }
  return out;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

std::string bool_word(bool ok) { return ok ? "PASS" : "FAIL"; }

class Session {
 public:
  Session(RunConfig cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err) {}

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  void header(const std::vector<std::string>& args) {
    out_ << "# hamsense " << kVersion << '\n';
    out_ << "# command: " << join_args(args) << '\n';
    out_ << "# caps: vertices=" << cfg_.cap_vertices << " subsets=" << cfg_.cap_subsets
         << " functions=" << cfg_.cap_functions << '\n';
    out_ << "# seed: " << (cfg_.seed ? std::to_string(*cfg_.seed) : std::string("none")) << '\n';
  }

  // Writes to --out if given, otherwise to stdout.
  void artifact(const json& j) {
    if (cfg_.out_path) {
      io::write_json_file(*cfg_.out_path, j);
      out_ << "wrote " << *cfg_.out_path << '\n';
    } else {
      out_ << j.dump() << '\n';
    }
  }

  void reports(const std::vector<BoundsReport>& rows) {
    auto emit = [&](std::ostream& os) {
      if (cfg_.format == OutputFormat::Csv) {
        write_csv(os, rows);
      } else {
        write_records(os, rows);
      }
    };
    if (cfg_.out_path) {
      std::ofstream file(*cfg_.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + *cfg_.out_path);
      emit(file);
      out_ << "wrote " << *cfg_.out_path << '\n';
    } else {
      emit(out_);
    }
  }

  oracle::SearchBudget budget() const {
    return oracle::SearchBudget{cfg_.cap_vertices, cfg_.cap_subsets, cfg_.cap_functions};
  }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

void print_metrics_summary(Session& s, const PartitionMetrics& metrics) {
  s.out() << "maxDegree=" << metrics.max_degree << '\n';
  s.out() << "imbalance=" << metrics.imbalance << '\n';
  s.out() << "partSizes=" << json(metrics.part_sizes).dump() << '\n';
}

void require(bool ok, const std::string& claim) {
  if (!ok) throw VerificationFailed{claim};
}

// construct ---------------------------------------------------------------

void construct_degree1(Session& s, int m, int n, bool verify) {
  const Partition p = degree_one_partition(m, n, s.cfg().cap_vertices);
  const PartitionMetrics metrics = partition_metrics(p);
  print_metrics_summary(s, metrics);
  if (verify) {
    require(metrics.max_degree <= 1, "degree-one partition has max degree <= 1");
    if (n >= 2) {
      const BigInt expected = m % 2 == 0 ? m - 2 : m - 1;
      require(metrics.imbalance == expected, "degree-one imbalance equals " + expected.str());
    }
    s.out() << "verdict=PASS\n";
  }
  s.artifact(io::to_json(p));
}

void construct_complete(Session& s, int m, int d, bool verify) {
  const Partition p = complete_graph_partition(m, d);
  const PartitionMetrics metrics = partition_metrics(p);
  print_metrics_summary(s, metrics);
  if (verify) {
    require(metrics.max_degree <= d, "K_m partition has max degree <= d");
    require(metrics.imbalance == 2 * ((d * m) / (d + 1)), "K_m imbalance equals 2 floor(dm/(d+1))");
    s.out() << "verdict=PASS\n";
  }
  s.artifact(io::to_json(p));
}

void construct_lift(Session& s, const std::string& in, int n, int degree_cap, bool verify) {
  const Partition base = io::partition_from_json(io::read_json_file(in), s.cfg().cap_vertices);
  const Partition lifted = lift_partition(base, n, degree_cap, s.cfg().cap_vertices);
  const PartitionMetrics metrics = partition_metrics(lifted);
  print_metrics_summary(s, metrics);
  if (verify) {
    const PartitionMetrics base_metrics = partition_metrics(base);
    const BigInt factor = big_pow(static_cast<std::uint64_t>(base.params().m()),
                                  static_cast<std::uint64_t>(n - base.params().n()));
    require(metrics.imbalance == factor * base_metrics.imbalance, "lift multiplies the imbalance by m^(n-n')");
    require(metrics.max_degree <= degree_cap, "lifted max degree <= cap");
    s.out() << "verdict=PASS\n";
  }
  s.artifact(io::to_json(lifted));
}

void construct_theorem(Session& s, int m, int d, int n, bool verify) {
  const TheoremConstruction c = theorem_partition(m, d, n, s.cfg().cap_vertices);
  const PartitionMetrics metrics = partition_metrics(c.partition);
  const ImbalanceBound bound = theorem_imbalance_bound(m, d, n);
  print_metrics_summary(s, metrics);
  s.out() << "achievedImbalance=" << c.achieved_imbalance << '\n';
  s.out() << "closedForm=" << format_rational(bound.closed_form) << '\n';
  if (bound.gap()) {
    s.out() << "flag=construction below closed form (divisibility gap): " << c.achieved_imbalance << " < "
            << format_rational(bound.closed_form) << '\n';
  }
  if (verify) {
    require(metrics.max_degree <= d, "theorem partition has max degree <= d");
    require(metrics.imbalance == c.achieved_imbalance, "measured imbalance equals the lifted imbalance");
    require(c.achieved_imbalance == bound.construction_bound, "achieved imbalance matches its closed form");
    if (!bound.gap()) {
      require(Rational(metrics.imbalance) >= bound.closed_form, "imbalance meets the closed-form bound");
    }
    s.out() << "verdict=PASS\n";
  }
  s.artifact(io::to_json(c.partition));
}

void construct_subgraph(Session& s, int m, int n, int d, bool verify) {
  const VertexSet set = low_degree_subgraph(m, n, d, s.cfg().cap_vertices);
  const int degree = induced_max_degree(set);
  const BigInt expected = low_degree_subgraph_size(m, n, d);
  s.out() << "size=" << set.size() << '\n';
  s.out() << "maxDegree=" << degree << '\n';
  if (verify) {
    require(BigInt(set.size()) == expected, "subgraph size equals " + expected.str());
    require(degree <= d, "subgraph max degree <= d");
    s.out() << "verdict=PASS\n";
  }
  s.artifact(io::to_json(set));
}

// metrics / bounds ---------------------------------------------------------

void metrics_command(Session& s, const std::string& path, bool verify) {
  const json doc = io::read_json_file(path);
  switch (io::classify(doc)) {
    case io::DocumentKind::Partition: {
      const Partition p = io::partition_from_json(doc, s.cfg().cap_vertices);
      const PartitionMetrics metrics = partition_metrics(p);
      s.artifact(io::to_json(metrics, p.params()));
      if (verify) {
        const auto rows = consistency_check(p.params(), metrics);
        write_records(s.out(), rows);
        require(!any_failed(rows), "partition metrics are consistent with every bound");
      }
      return;
    }
    case io::DocumentKind::VertexSet: {
      const VertexSet set = io::vertex_set_from_json(doc, s.cfg().cap_vertices);
      const DegreeWitness w = induced_max_degree_witness(set);
      json j{{"size", set.size()}, {"maxDegree", w.degree}};
      if (w.vertex) {
        const Vertex v = unrank(*w.vertex, set.params());
        j["witness"] = std::vector<int>(v.digits().begin(), v.digits().end());
      } else {
        j["witness"] = nullptr;
      }
      s.artifact(j);
      if (verify) {
        const auto rows = consistency_check(measure(set));
        write_records(s.out(), rows);
        require(!any_failed(rows), "subgraph is consistent with every bound");
      }
      return;
    }
    default:
      throw InvalidInput(path + " is neither a partition nor a vertex set document");
  }
}

void bounds_command(Session& s, int m, int n, std::optional<int> d, const std::optional<std::string>& eps,
                    std::optional<std::uint64_t> k, const std::optional<std::string>& in) {
  std::optional<Rational> eps_value;
  if (eps) eps_value = parse_rational(*eps);
  std::optional<BigInt> size;
  if (k) size = BigInt(*k);
  auto rows = evaluate_bounds(m, n, d, eps_value, size);
  if (in) {
    const json doc = io::read_json_file(*in);
    std::vector<BoundsReport> checked;
    if (io::classify(doc) == io::DocumentKind::Partition) {
      const Partition p = io::partition_from_json(doc, s.cfg().cap_vertices);
      checked = consistency_check(p.params(), partition_metrics(p), d);
    } else if (io::classify(doc) == io::DocumentKind::VertexSet) {
      MeasuredSubgraph measured = measure(io::vertex_set_from_json(doc, s.cfg().cap_vertices), *in);
      measured.claimed_degree = d;
      checked = consistency_check(measured);
    } else {
      throw InvalidInput(*in + " is neither a partition nor a vertex set document");
    }
    rows.insert(rows.end(), checked.begin(), checked.end());
  }
  s.reports(rows);
  require(!any_failed(rows), "every applicable bound holds");
}

// fn -------------------------------------------------------------------------

FiniteFunction load_function(Session& s, const std::string& path) {
  return io::function_from_json(io::read_json_file(path), s.cfg().cap_vertices);
}

std::string digits_json(const Vertex& v) {
  return json(std::vector<int>(v.digits().begin(), v.digits().end())).dump();
}

void print_bound_report(Session& s, const SensitivityBoundReport& r) {
  s.out() << "degree=" << r.degree << '\n';
  s.out() << "sensitivity=" << r.sensitivity << '\n';
  s.out() << "witness=" << digits_json(r.witness) << '\n';
  const int m1 = r.domain_size - 1;
  if (m1 > 0) {
    s.out() << "lower_bound=sqrt(" << r.degree << "/" << m1
            << ")=" << format_decimal(std::sqrt(static_cast<double>(r.degree) / m1)) << '\n';
  }
  if (r.ratio) s.out() << "ratio=" << format_decimal(*r.ratio) << '\n';
}

void fn_verify(Session& s, const FiniteFunction& f) {
  const SensitivityBoundReport r = verify_sensitivity_bound(f, s.cfg().cap_vertices);
  print_bound_report(s, r);
  s.out() << "verdict=" << bool_word(r.holds) << '\n';
  require(r.holds, "s(f)^2 (|A|-1) >= deg(f)");
}

void fn_tribes(Session& s, int sz, bool verify) {
  const FiniteFunction f = tribes(sz, s.cfg().cap_vertices);
  if (verify) {
    const SensitivityBoundReport r = verify_sensitivity_bound(f, s.cfg().cap_vertices);
    print_bound_report(s, r);
    const Vertex ones(std::vector<int>(static_cast<std::size_t>(sz * sz), 1));
    const bool ok = r.holds && r.degree == sz * sz && r.sensitivity == sz && local_sensitivity(f, ones) == sz;
    s.out() << "verdict=" << bool_word(ok) << '\n';
    require(ok, "tribes(s) has degree s^2 and sensitivity s, attained at the all-ones point");
  }
  s.artifact(io::to_json(f));
}

void fn_lifted_tribes(Session& s, int m, const std::string& a, int sz, bool verify) {
  const FiniteFunction f = lifted_tribes(integer_domain(m), parse_rational(a), sz, s.cfg().cap_vertices);
  if (verify) {
    const SensitivityBoundReport r = verify_sensitivity_bound(f, s.cfg().cap_vertices);
    print_bound_report(s, r);
    s.out() << "upper_bound=sqrt(" << (m - 1) << "*" << r.degree
            << ")=" << format_decimal(std::sqrt(static_cast<double>(m - 1) * r.degree)) << '\n';
    const long long sens = r.sensitivity;
    const bool tight = sens * sens == static_cast<long long>(m - 1) * r.degree;
    const bool ok = r.holds && tight && r.degree == (m - 1) * sz * sz && r.sensitivity == (m - 1) * sz;
    s.out() << "verdict=" << bool_word(ok) << '\n';
    require(ok, "lifted tribes has degree (m-1)s^2 and sensitivity (m-1)s");
  }
  s.artifact(io::to_json(f));
}

// oracle -----------------------------------------------------------------------

void oracle_sigma(Session& s, int m, int n) {
  const int sigma = oracle::sigma_exact(m, n, s.budget());
  const int expected = m == 2 ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) - 1e-12)) : 1;
  s.out() << "sigma=" << sigma << '\n';
  s.out() << "closed_form=" << expected << '\n';
  s.out() << "verdict=" << bool_word(sigma == expected) << '\n';
  require(sigma == expected, "sigma(H(n,m)) matches its closed form");
}

void oracle_subsets(Session& s, int m, int n, int k, bool fix_first) {
  const auto result = oracle::min_max_degree_subsets(m, n, k, s.budget(), fix_first);
  s.out() << "min_max_degree=" << result.min_max_degree << '\n';
  s.out() << "subsets_examined=" << result.subsets_examined << '\n';
  s.artifact(io::to_json(result.witness));
}

void oracle_functions(Session& s, int m, int n, int b, std::optional<std::uint64_t> samples) {
  std::optional<oracle::SamplingPlan> plan;
  if (samples) {
    if (!s.cfg().seed) throw InvalidInput("sampling requires an explicit --seed");
    plan = oracle::SamplingPlan{*s.cfg().seed, *samples};
  }
  const auto report = oracle::exhaustive_function_check(integer_domain(m), n, integer_domain(b), s.budget(), plan);
  s.reports(oracle::to_reports(report, m, n));
  require(report.violations.empty(), "no function violates the sensitivity theorem or the restriction pipeline");
}

void oracle_metrics(Session& s, const std::string& path) {
  const Partition p = io::partition_from_json(io::read_json_file(path), s.cfg().cap_vertices);
  const PartitionMetrics fast = partition_metrics(p);
  const PartitionMetrics slow = oracle::brute_force_metrics(p);
  s.artifact(io::to_json(slow, p.params()));
  const bool same = fast.max_degree == slow.max_degree && fast.imbalance == slow.imbalance &&
                    fast.part_sizes == slow.part_sizes;
  s.out() << "fast_path_agrees=" << (same ? "true" : "false") << '\n';
  require(same, "fast-path metrics equal brute-force metrics");
}

// report grid --------------------------------------------------------------------

void report_grid(Session& s, const std::vector<int>& ms, const std::vector<int>& ns, const std::vector<int>& ds) {
  std::vector<BoundsReport> rows;
  for (int m : ms) {
    for (int n : ns) {
      for (int d : ds) {
        const std::string param = std::to_string(d);
        if (m < 3 || n < 1 || d < 1) {
          rows.push_back({"theorem-cell", m, n, param, "-", std::nullopt, Verdict::Skipped, "outside m>=3, n>=1, d>=1"});
          continue;
        }
        if (GraphParams(m, n).vertex_count() > s.cfg().cap_vertices) {
          rows.push_back({"theorem-cell", m, n, param, "-", std::nullopt, Verdict::Skipped, "vertex cap"});
          continue;
        }
        const TheoremConstruction c = theorem_partition(m, d, n, s.cfg().cap_vertices);
        const PartitionMetrics metrics = partition_metrics(c.partition);
        const ImbalanceBound bound = theorem_imbalance_bound(m, d, n);
        rows.push_back({"theorem-degree", m, n, param, std::to_string(d), std::to_string(metrics.max_degree),
                        metrics.max_degree <= d ? Verdict::Pass : Verdict::Fail, ""});
        rows.push_back({"construction-imbalance", m, n, param, bound.construction_bound.str(),
                        metrics.imbalance.str(),
                        metrics.imbalance == bound.construction_bound ? Verdict::Pass : Verdict::Fail, ""});
        BoundsReport closed{"theorem-imbalance", m, n, param, format_rational(bound.closed_form),
                            metrics.imbalance.str(), Verdict::Pass, ""};
        if (Rational(metrics.imbalance) < bound.closed_form) {
          const bool documented_gap = d >= n && metrics.imbalance == bound.construction_bound;
          closed.verdict = documented_gap ? Verdict::Flag : Verdict::Fail;
          closed.note = documented_gap ? "third-case divisibility gap" : "below closed form";
        }
        rows.push_back(std::move(closed));
      }
    }
  }
  s.reports(rows);
  require(!any_failed(rows), "every grid cell meets its construction guarantee");
}

// configuration ----------------------------------------------------------------------

void apply_config_file(RunConfig& cfg, const std::string& path) {
  const json doc = io::read_json_file(path);
  if (!doc.is_object()) throw InvalidInput("config file " + path + " must hold a JSON object");
  auto read = [&](const char* key, std::uint64_t& target) {
    if (!doc.contains(key)) return;
    if (!doc.at(key).is_number_unsigned()) throw InvalidInput(std::string("config field '") + key + "' must be a positive integer");
    target = doc.at(key).get<std::uint64_t>();
  };
  read("capVertices", cfg.cap_vertices);
  read("capSubsets", cfg.cap_subsets);
  read("capFunctions", cfg.cap_functions);
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw InvalidInput("config field 'seed' must be a non-negative integer");
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
}

CLI::App* add_sub(CLI::App* parent, const std::string& name, const std::string& desc) {
  CLI::App* sub = parent->add_subcommand(name, desc);
  sub->fallthrough();
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Imbalanced low-degree partitions of Hamming graphs and sensitivity of m-ary functions", "hamsense"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> cap_vertices, cap_subsets, cap_functions, seed;
  std::optional<std::string> config_path, out_path;
  std::string format = "records";
  bool verbose = false;
  app.add_option("--cap-vertices", cap_vertices, "Max vertices any enumeration may visit");
  app.add_option("--cap-subsets", cap_subsets, "Max subsets the oracle may enumerate");
  app.add_option("--cap-functions", cap_functions, "Max functions the oracle may enumerate or sample");
  app.add_option("--seed", seed, "Seed for sampling mode");
  app.add_option("--config", config_path, "JSON file with capVertices/capSubsets/capFunctions/seed");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"records", "csv"}));
  app.add_option("--out", out_path, "Write the artifact to PATH instead of stdout");
  app.add_flag("-v,--verbose", verbose, "Echo the resolved configuration to stderr");

  int m = 0, n = 0, d = 0, sz = 0, k = 0, b = 2;
  bool verify = false, fix_first = false;
  std::string a = "0", in_path, file_path, m_range, n_range, d_range;
  std::optional<int> opt_d;
  std::optional<std::string> eps, bounds_in;
  std::optional<std::uint64_t> size_k, samples;

  auto* construct = add_sub(&app, "construct", "Build a partition or a large low-degree subgraph");
  construct->require_subcommand(1);
  auto* c_degree1 = add_sub(construct, "degree1", "Degree-one imbalanced partition of H(n,m)");
  c_degree1->add_option("--m", m)->required();
  c_degree1->add_option("--n", n)->required();
  c_degree1->add_flag("--verify", verify);
  auto* c_complete = add_sub(construct, "complete", "Partition of K_m with max degree d");
  c_complete->add_option("--m", m)->required();
  c_complete->add_option("--d", d)->required();
  c_complete->add_flag("--verify", verify);
  auto* c_lift = add_sub(construct, "lift", "Lift a partition file to H(n,m)");
  c_lift->add_option("--in", in_path, "Base partition file")->required();
  c_lift->add_option("--n", n)->required();
  c_lift->add_option("--d", d, "Degree cap for the lifted partition")->required();
  c_lift->add_flag("--verify", verify);
  auto* c_theorem = add_sub(construct, "theorem1", "Imbalanced partition with max degree <= d");
  c_theorem->add_option("--m", m)->required();
  c_theorem->add_option("--d", d)->required();
  c_theorem->add_option("--n", n)->required();
  c_theorem->add_flag("--verify", verify);
  auto* c_subgraph = add_sub(construct, "subgraph", "Large induced subgraph with max degree <= d");
  c_subgraph->add_option("--m", m)->required();
  c_subgraph->add_option("--n", n)->required();
  c_subgraph->add_option("--d", d)->required();
  c_subgraph->add_flag("--verify", verify);

  auto* metrics = add_sub(&app, "metrics", "Exact metrics of a partition or vertex-set file");
  metrics->add_option("file", file_path)->required();
  metrics->add_flag("--verify", verify, "Also check every applicable bound");

  auto* bounds = add_sub(&app, "bounds", "Evaluate the bound formulas");
  bounds->add_option("--m", m)->required();
  bounds->add_option("--n", n)->required();
  bounds->add_option("--d", opt_d);
  bounds->add_option("--eps", eps, "Excess density as an integer or p/q");
  bounds->add_option("--k", size_k, "Subgraph size");
  bounds->add_option("--in", bounds_in, "Partition or vertex-set file to check against the bounds");

  auto* fn = add_sub(&app, "fn", "Degree and sensitivity of functions A^n -> B");
  fn->require_subcommand(1);
  std::vector<CLI::App*> fn_file_cmds;
  const std::pair<const char*, const char*> fn_file_specs[] = {
      {"interpolate", "Interpolating polynomial with exact coefficients"},
      {"degree", "Total degree of the interpolating polynomial"},
      {"sensitivity", "Sensitivity and a point attaining it"},
      {"decompose", "Indicator functions [f = b], one per element of B"},
      {"restrict", "Boolean restriction witness"},
      {"verify", "Check s(f)^2 (|A|-1) >= deg(f) and the restriction"},
  };
  for (const auto& [name, description] : fn_file_specs) {
    auto* sub = add_sub(fn, name, description);
    sub->add_option("file", file_path)->required();
    fn_file_cmds.push_back(sub);
  }
  auto* f_tribes = add_sub(fn, "tribes", "Tribes function with s tribes of size s");
  f_tribes->add_option("--s", sz)->required();
  f_tribes->add_flag("--verify", verify);
  auto* f_lifted = add_sub(fn, "lifted-tribes", "Tribes lifted to A = {0..m-1} through [x = a]");
  f_lifted->add_option("--m", m)->required();
  f_lifted->add_option("--a", a);
  f_lifted->add_option("--s", sz)->required();
  f_lifted->add_flag("--verify", verify);

  auto* orc = add_sub(&app, "oracle", "Brute-force ground truth at small sizes");
  orc->require_subcommand(1);
  auto* o_sigma = add_sub(orc, "sigma", "Exact graph sensitivity of H(n,m)");
  o_sigma->add_option("--m", m)->required();
  o_sigma->add_option("--n", n)->required();
  auto* o_subsets = add_sub(orc, "subsets", "Min max degree over all k-subsets");
  o_subsets->add_option("--m", m)->required();
  o_subsets->add_option("--n", n)->required();
  o_subsets->add_option("--k", k)->required();
  o_subsets->add_flag("--fix-first", fix_first, "Only search subsets containing vertex 0");
  auto* o_functions = add_sub(orc, "functions", "Check the sensitivity theorem on every f: {0..m-1}^n -> {0..b-1}");
  o_functions->add_option("--m", m)->required();
  o_functions->add_option("--n", n)->required();
  o_functions->add_option("--b", b, "Range size");
  o_functions->add_option("--samples", samples, "Sample this many functions instead of enumerating (needs --seed)");
  auto* o_metrics = add_sub(orc, "metrics", "Brute-force metrics of a partition file");
  o_metrics->add_option("file", file_path)->required();

  auto* report = add_sub(&app, "report", "Parameter sweeps");
  report->require_subcommand(1);
  auto* r_grid = add_sub(report, "grid", "Theorem construction over an (m, n, d) grid");
  r_grid->add_option("--m", m_range, "Range such as 3..5 or 3,4")->required();
  r_grid->add_option("--n", n_range)->required();
  r_grid->add_option("--d", d_range)->required();

  const auto known = [](const CLI::App* parent, const std::string& name) {
    for (const auto* sub : parent->get_subcommands([](const CLI::App*) { return true; })) {
      if (sub->get_name() == name) return true;
    }
    return false;
  };
  if (!args.empty() && args[0].rfind('-', 0) != 0) {
    if (!known(&app, args[0])) {
      err << "unknown subcommand: " << args[0] << '\n';
      return kExitUsage;
    }
    const CLI::App* group = app.get_subcommand(args[0]);
    if (args.size() > 1 && args[1].rfind('-', 0) != 0 && group->get_require_subcommand_min() > 0 &&
        !known(group, args[1])) {
      err << "unknown subcommand: " << args[0] << ' ' << args[1] << '\n';
      return kExitUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg = default_config();
    if (config_path) apply_config_file(cfg, *config_path);
    if (cap_vertices) cfg.cap_vertices = *cap_vertices;
    if (cap_subsets) cfg.cap_subsets = *cap_subsets;
    if (cap_functions) cfg.cap_functions = *cap_functions;
    if (seed) cfg.seed = *seed;
    if (cfg.cap_vertices == 0 || cfg.cap_subsets == 0 || cfg.cap_functions == 0) {
      throw InvalidInput("caps must be positive");
    }
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Records;
    cfg.out_path = out_path;
    cfg.verbose = verbose;

    Session s(cfg, out, err);
    s.header(args);
    if (cfg.verbose) {
      err << "config: vertices=" << cfg.cap_vertices << " subsets=" << cfg.cap_subsets
          << " functions=" << cfg.cap_functions << " format=" << format << '\n';
    }

    if (c_degree1->parsed()) {
      construct_degree1(s, m, n, verify);
    } else if (c_complete->parsed()) {
      construct_complete(s, m, d, verify);
    } else if (c_lift->parsed()) {
      construct_lift(s, in_path, n, d, verify);
    } else if (c_theorem->parsed()) {
      construct_theorem(s, m, d, n, verify);
    } else if (c_subgraph->parsed()) {
      construct_subgraph(s, m, n, d, verify);
    } else if (metrics->parsed()) {
      metrics_command(s, file_path, verify);
    } else if (bounds->parsed()) {
      bounds_command(s, m, n, opt_d, eps, size_k, bounds_in);
    } else if (fn_file_cmds[0]->parsed()) {
      s.artifact(io::to_json(interpolate(load_function(s, file_path), cfg.cap_vertices)));
    } else if (fn_file_cmds[1]->parsed()) {
      s.out() << "degree=" << degree(load_function(s, file_path), cfg.cap_vertices) << '\n';
    } else if (fn_file_cmds[2]->parsed()) {
      const auto r = sensitivity(load_function(s, file_path));
      s.out() << "sensitivity=" << r.sensitivity << '\n' << "witness=" << digits_json(r.witness) << '\n';
    } else if (fn_file_cmds[3]->parsed()) {
      const FiniteFunction f = load_function(s, file_path);
      json parts = json::array();
      const auto pieces = indicator_decomposition(f);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        parts.push_back(json{{"b", io::rational_to_json(f.range()[i])},
                             {"degree", degree(pieces[i], cfg.cap_vertices)},
                             {"function", io::to_json(pieces[i])}});
      }
      s.artifact(parts);
    } else if (fn_file_cmds[4]->parsed()) {
      s.artifact(io::to_json(boolean_restriction_witness(load_function(s, file_path), cfg.cap_vertices)));
    } else if (fn_file_cmds[5]->parsed()) {
      fn_verify(s, load_function(s, file_path));
    } else if (f_tribes->parsed()) {
      fn_tribes(s, sz, verify);
    } else if (f_lifted->parsed()) {
      fn_lifted_tribes(s, m, a, sz, verify);
    } else if (o_sigma->parsed()) {
      oracle_sigma(s, m, n);
    } else if (o_subsets->parsed()) {
      oracle_subsets(s, m, n, k, fix_first);
    } else if (o_functions->parsed()) {
      oracle_functions(s, m, n, b, samples);
    } else if (o_metrics->parsed()) {
      oracle_metrics(s, file_path);
    } else if (r_grid->parsed()) {
      report_grid(s, parse_range(m_range), parse_range(n_range), parse_range(d_range));
    }
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what << '\n';
    return kExitVerificationFailed;
  } catch (const InvariantViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "contract violated: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundNotApplicable& e) {
    err << "bound not applicable: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hamsense::cli
