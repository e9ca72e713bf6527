// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamsense/bounds.hpp"
#include "hamsense/errors.hpp"
#include "hamsense/oracle.hpp"
#include "hamsense/partition.hpp"
#include "hamsense/polysense.hpp"
#include "support/oracles.hpp"

namespace {

using namespace hamsense;
namespace ht = hamsense::testing;
using Clock = std::chrono::steady_clock;

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitDegreeOne = 5.0;
constexpr double kLimitSensitivity = 60.0;
constexpr double kLimitSigma = 120.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

// Every subgraph or partition part built in criteria 1-6, for the Markov check.
struct Measured {
  int m;
  int n;
  std::uint64_t size;
  int degree;
  std::string label;
};
std::vector<Measured> g_measured;

void record_parts(const Partition& p, const std::string& label) {
  for (PartIndex i = 0; i < static_cast<PartIndex>(p.part_count()); ++i) {
    const VertexSet part = p.part(i);
    g_measured.push_back({p.params().m(), p.params().n(), part.size(), induced_max_degree(part),
                          label + " part " + std::to_string(i)});
  }
}

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

std::vector<int> boolean_table(const FiniteFunction& f) {
  std::vector<int> out;
  for (Rank r = 0; r < f.values().size(); ++r) out.push_back(static_cast<int>(f.value(r)));
  return out;
}

// Induced max degree of every part by pairwise distance scan.
int naive_partition_degree(const Partition& p) {
  std::map<PartIndex, std::vector<std::uint64_t>> parts;
  for (Rank r = 0; r < p.assignment().size(); ++r) parts[p.part_of(r)].push_back(r);
  int best = 0;
  for (const auto& [i, members] : parts) best = std::max(best, ht::naive_max_degree(members, p.params().m(), p.params().n()));
  return best;
}

Outcome degree_one_construction() {
  Outcome o;
  int cells = 0;
  for (int m = 3; m <= 6; ++m) {
    for (int n = 2; n <= 4; ++n) {
      if (ipow(static_cast<std::uint64_t>(m), n) > 1296) continue;
      const Partition p = degree_one_partition(m, n);
      const PartitionMetrics metrics = partition_metrics(p);
      std::uint64_t total = 0;
      for (auto s : metrics.part_sizes) total += s;
      const std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      o.expect(total == ipow(static_cast<std::uint64_t>(m), n), cell + " not total");
      o.expect(metrics.max_degree <= 1, cell + " max degree " + std::to_string(metrics.max_degree));
      const int expected = m % 2 == 0 ? m - 2 : m - 1;
      o.expect(metrics.imbalance == expected, cell + " imbalance " + metrics.imbalance.str());
      record_parts(p, "degree-one " + cell);
      ++cells;
    }
  }
  o.detail = std::to_string(cells) + " cells";
  return o;
}

Outcome four_three_instance() {
  Outcome o;
  const Partition p = degree_one_partition(4, 3);
  const PartitionMetrics fast = partition_metrics(p);
  const PartitionMetrics slow = oracle::brute_force_metrics(p);
  const std::vector<std::uint64_t> sizes{16, 17, 16, 15};
  for (const auto* m : {&fast, &slow}) {
    o.expect(m->part_sizes == sizes, "sizes " + join(m->part_sizes));
    o.expect(m->imbalance == 2, "imbalance " + m->imbalance.str());
    o.expect(m->max_degree == 1, "max degree " + std::to_string(m->max_degree));
  }
  o.expect(naive_partition_degree(p) == 1, "pairwise scan disagrees");
  o.detail = "sizes " + join(fast.part_sizes) + ", imbalance " + fast.imbalance.str() + ", degree " +
             std::to_string(fast.max_degree);
  return o;
}

Outcome complete_graph_partitions() {
  Outcome o;
  int cells = 0;
  for (int m = 1; m <= 20; ++m) {
    for (int d = 0; d <= m; ++d) {
      const Partition p = complete_graph_partition(m, d);
      const PartitionMetrics metrics = partition_metrics(p);
      const std::string cell = "(m=" + std::to_string(m) + ",d=" + std::to_string(d) + ")";
      o.expect(metrics.imbalance == 2 * ((d * m) / (d + 1)), cell + " imbalance " + metrics.imbalance.str());
      o.expect(metrics.max_degree <= d, cell + " degree " + std::to_string(metrics.max_degree));
      if (m >= 2) record_parts(p, "complete " + cell);
      ++cells;
    }
  }
  o.detail = std::to_string(cells) + " (m,d) pairs";
  return o;
}

Outcome lifting_map() {
  Outcome o;
  // Block sums computed directly: blocks {0,1} and {2,3}.
  const LiftMap map(3, 4, 2);
  const auto image = map.image_table();
  std::map<std::pair<int, int>, int> fibers;
  for (Rank r = 0; r < 81; ++r) {
    const auto x = ht::digits_of(r, 3, 4);
    const std::pair<int, int> y{(x[0] + x[1]) % 3, (x[2] + x[3]) % 3};
    o.expect(image[r] == static_cast<Rank>(y.first * 3 + y.second), "lift image mismatch at rank " + std::to_string(r));
    ++fibers[y];
  }
  o.expect(fibers.size() == 9, "fiber count " + std::to_string(fibers.size()));
  for (const auto& [y, count] : fibers) o.expect(count == 9, "fiber size " + std::to_string(count));

  const Partition base = degree_one_partition(3, 2);
  const Partition lifted = lift_partition(base, 4, 2);
  const PartitionMetrics bm = partition_metrics(base);
  const PartitionMetrics lm = partition_metrics(lifted);
  o.expect(bm.imbalance == 2, "base imbalance " + bm.imbalance.str());
  o.expect(lm.imbalance == 18, "lifted imbalance " + lm.imbalance.str());
  const int enumerated = naive_partition_degree(lifted);
  o.expect(enumerated <= 2, "lifted degree " + std::to_string(enumerated));
  record_parts(lifted, "lift (3,2)->4");

  int grid = 0;
  for (int m = 3; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (int bn = 1; bn <= n; ++bn) {
        const Partition b = bn == 1 ? complete_graph_partition(m, 1) : degree_one_partition(m, bn);
        const PartitionMetrics bmet = partition_metrics(b);
        const int block = (n + bn - 1) / bn;
        const Partition l = lift_partition(b, n, bmet.max_degree * block);
        const PartitionMetrics lmet = partition_metrics(l);
        const std::string cell = "(m=" + std::to_string(m) + ",n'=" + std::to_string(bn) + ",n=" + std::to_string(n) + ")";
        o.expect(lmet.imbalance == BigInt(ipow(static_cast<std::uint64_t>(m), n - bn)) * bmet.imbalance,
                 cell + " imbalance " + lmet.imbalance.str());
        o.expect(lmet.max_degree <= bmet.max_degree * block, cell + " degree " + std::to_string(lmet.max_degree));
        record_parts(l, "lift " + cell);
        ++grid;
      }
    }
  }
  o.detail = "9 fibers of size 9, imbalance 2 -> 18, degree " + std::to_string(enumerated) + "; " +
             std::to_string(grid) + " grid lifts";
  return o;
}

Outcome theorem_sweep() {
  Outcome o;
  int small = 0, large = 0, flagged = 0;
  std::vector<std::string> flags;
  for (int m = 3; m <= 5; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (int d = 1; d <= (m - 1) * n; ++d) {
        const auto c = theorem_partition(m, d, n);
        const PartitionMetrics metrics = partition_metrics(c.partition);
        const std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
        o.expect(metrics.max_degree <= d, cell + " degree " + std::to_string(metrics.max_degree));
        o.expect(metrics.imbalance == c.achieved_imbalance, cell + " measured imbalance differs from achieved");
        o.expect(c.achieved_imbalance == theorem_construction_imbalance(m, d, n), cell + " closed form differs");
        const auto bound = theorem_imbalance_bound(m, d, n);
        if (d < n) {
          const BigInt closed = BigInt(m % 2 == 0 ? m - 2 : m - 1) * ipow(static_cast<std::uint64_t>(m), (n * (d - 1)) / d);
          o.expect(c.achieved_imbalance >= closed, cell + " below closed form");
          o.expect(c.achieved_imbalance == closed, cell + " differs from closed form");
          o.expect(!bound.gap(), cell + " unexpected gap");
          ++small;
        } else {
          const int q = d / n;
          const BigInt expected = BigInt(ipow(static_cast<std::uint64_t>(m), n - 1)) * 2 * ((m * q) / (q + 1));
          o.expect(c.achieved_imbalance == expected, cell + " large-degree imbalance " + c.achieved_imbalance.str());
          const bool gap = Rational(c.achieved_imbalance) < Rational(2 * BigInt(ipow(static_cast<std::uint64_t>(m), n)) * q, q + 1);
          o.expect(gap == bound.gap(), cell + " gap detection differs");
          if (gap) {
            ++flagged;
            if (flags.size() < 4) flags.push_back(cell);
          }
          ++large;
        }
        record_parts(c.partition, "theorem " + cell);
      }
    }
  }
  const auto extra = theorem_partition(4, 5, 2);
  o.expect(extra.achieved_imbalance == 16, "(4,2,5) achieved " + extra.achieved_imbalance.str());
  o.expect(theorem_imbalance_bound(4, 5, 2).gap(), "(4,2,5) not flagged");
  std::string f;
  for (const auto& c : flags) f += " " + c;
  o.detail = std::to_string(small) + " d<n cells exact, " + std::to_string(large) + " d>=n cells, " +
             std::to_string(flagged) + " flagged divisibility gaps (e.g." + f + "; (4,2,5): 16 < 64/3)";
  return o;
}

Outcome large_subgraphs() {
  Outcome o;
  const VertexSet a = low_degree_subgraph(4, 3, 1);
  const VertexSet b = low_degree_subgraph(3, 2, 3);
  const int da = ht::naive_max_degree(a.ranks(), 4, 3);
  const int db = ht::naive_max_degree(b.ranks(), 3, 2);
  o.expect(a.size() == 16 + 1, "(4,3,1) size " + std::to_string(a.size()));
  o.expect(da <= 1, "(4,3,1) degree " + std::to_string(da));
  o.expect(b.size() == 2 * 3, "(3,2,3) size " + std::to_string(b.size()));
  o.expect(db <= 2, "(3,2,3) degree " + std::to_string(db));
  o.expect(low_degree_subgraph_size(4, 3, 1) == a.size(), "(4,3,1) closed form");
  o.expect(low_degree_subgraph_size(3, 2, 3) == b.size(), "(3,2,3) closed form");
  g_measured.push_back({4, 3, a.size(), induced_max_degree(a), "subgraph (4,3,1)"});
  g_measured.push_back({3, 2, b.size(), induced_max_degree(b), "subgraph (3,2,3)"});
  for (int m = 3; m <= 5; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d <= (m - 1) * n; ++d) {
        const VertexSet s = low_degree_subgraph(m, n, d);
        const BigInt expected = d < n ? BigInt(ipow(static_cast<std::uint64_t>(m), n - 1) +
                                               ipow(static_cast<std::uint64_t>(m), ((d - 1) * n) / d))
                                      : BigInt(((d + 1 + n - 1) / n) * ipow(static_cast<std::uint64_t>(m), n - 1));
        const int deg = induced_max_degree(s);
        o.expect(BigInt(s.size()) == expected, "subgraph size");
        o.expect(deg <= d, "subgraph degree");
        g_measured.push_back({m, n, s.size(), deg, "subgraph"});
      }
    }
  }
  o.detail = "size 17 degree " + std::to_string(da) + "; size 6 degree " + std::to_string(db);
  return o;
}

Outcome markov_consistency() {
  Outcome o;
  int checked = 0, skipped = 0;
  for (const auto& s : g_measured) {
    const BigInt total = ipow(static_cast<std::uint64_t>(s.m), s.n);
    if (Rational(BigInt(s.size), total) <= Rational(1, s.m)) {
      ++skipped;
      continue;
    }
    const Rational bound = markov_degree_lower_bound(s.m, s.n, BigInt(s.size));
    o.expect(Rational(s.degree) >= bound, s.label + ": degree " + std::to_string(s.degree) + " < " + format_rational(bound));
    ++checked;
  }
  o.expect(checked > 0, "nothing to check");
  o.detail = std::to_string(checked) + " sets above m^(n-1) checked, " + std::to_string(skipped) +
             " at or below (not applicable), 0 allowed violations";
  return o;
}

Outcome sensitivity_theorem() {
  Outcome o;
  int functions = 0, restrictions = 0;
  for (int m : {3, 2}) {
    const std::uint64_t points = ipow(static_cast<std::uint64_t>(m), 2);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << points); ++code) {
      std::vector<ValueIndex> values(points);
      for (std::uint64_t i = 0; i < points; ++i) values[i] = static_cast<ValueIndex>((code >> i) & 1);
      const FiniteFunction f(integer_domain(m), ints({0, 1}), 2, values);
      ++functions;
      std::vector<Rational> as_rational(values.begin(), values.end());
      const int deg = ht::total_degree_of(ht::gauss_interpolate(integer_domain(m), 2, as_rational));
      const int s = ht::naive_sensitivity(f);
      o.expect(s * s * (m - 1) >= deg, "inequality fails for table " + std::to_string(code));
      const auto report = verify_sensitivity_bound(f);
      o.expect(report.holds && report.degree == deg && report.sensitivity == s, "library report differs");
      if (deg == 0) continue;
      const RestrictionWitness w = boolean_restriction_witness(f);
      const int target = (deg + m - 2) / (m - 1);
      const int gdeg = ht::mobius_degree(boolean_table(w.restricted), 2);
      const int gs = ht::naive_sensitivity(w.restricted);
      o.expect(gdeg >= target, "restricted degree " + std::to_string(gdeg) + " < " + std::to_string(target));
      o.expect(gs <= s, "restricted sensitivity grew");
      ++restrictions;
    }
  }
  const auto r3 = oracle::exhaustive_function_check(integer_domain(3), 2, ints({0, 1}));
  const auto r2 = oracle::exhaustive_function_check(integer_domain(2), 2, ints({0, 1}));
  o.expect(r3.functions_checked == 512 && r3.violations.empty(), "ternary exhaustive check");
  o.expect(r2.functions_checked == 16 && r2.violations.empty(), "binary exhaustive check");
  o.detail = std::to_string(functions) + " functions, " + std::to_string(restrictions) + " restrictions, 0 violations";
  return o;
}

Outcome tightness() {
  Outcome o;
  const FiniteFunction f = lifted_tribes(integer_domain(3), 0, 2);
  std::vector<Rational> values;
  for (Rank r = 0; r < f.values().size(); ++r) values.push_back(f.value(r));
  const int deg = ht::total_degree_of(ht::gauss_interpolate(integer_domain(3), 4, values));
  const int s = ht::naive_sensitivity(f);
  o.expect(deg == 8, "lifted tribes degree " + std::to_string(deg));
  o.expect(s == 4, "lifted tribes sensitivity " + std::to_string(s));
  o.expect(s * s == (3 - 1) * deg, "s^2 != (m-1) deg");
  o.expect(degree(f) == deg && sensitivity(f).sensitivity == s, "library disagrees on lifted tribes");
  std::string tribes_detail;
  for (int k = 1; k <= 3; ++k) {
    const FiniteFunction t = tribes(k);
    const int td = ht::mobius_degree(boolean_table(t), k * k);
    const int ts = ht::naive_sensitivity(t);
    o.expect(td == k * k, "tribes(" + std::to_string(k) + ") degree " + std::to_string(td));
    o.expect(ts == k, "tribes(" + std::to_string(k) + ") sensitivity " + std::to_string(ts));
    tribes_detail += " (" + std::to_string(td) + "," + std::to_string(ts) + ")";
  }
  o.detail = "lifted tribes deg " + std::to_string(deg) + ", s " + std::to_string(s) + "; tribes (deg,s):" + tribes_detail;
  return o;
}

Outcome graph_sensitivity() {
  Outcome o;
  const std::array<std::array<int, 3>, 3> cases{{{2, 2, 2}, {2, 3, 2}, {3, 2, 1}}};
  std::string detail;
  for (const auto& [m, n, expected] : cases) {
    const int got = oracle::sigma_exact(m, n);
    o.expect(got == expected, "sigma(" + std::to_string(m) + "," + std::to_string(n) + ") = " + std::to_string(got));
    detail += (detail.empty() ? "" : ", ") + std::string("sigma(m=") + std::to_string(m) + ",n=" + std::to_string(n) +
              ")=" + std::to_string(got);
  }
  o.detail = detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  int partitions = 0, functions = 0, alphas = 0;
  for (int m = 2; m <= 100; ++m) {
    for (int n = 1; ipow(static_cast<std::uint64_t>(m), n) <= 100; ++n) {
      const GraphParams params(m, n);
      const std::uint64_t size = ipow(static_cast<std::uint64_t>(m), n);
      std::vector<Partition> instances{degree_one_partition(m, n), Partition(params, std::vector<PartIndex>(size, 0))};
      if (m >= 3) {
        for (int d = 1; d <= (m - 1) * n; ++d) instances.push_back(theorem_partition(m, d, n).partition);
      }
      std::uniform_int_distribution<PartIndex> pick(0, static_cast<PartIndex>(m - 1));
      for (int t = 0; t < 3; ++t) {
        std::vector<PartIndex> assignment(size);
        for (auto& a : assignment) a = pick(rng);
        instances.emplace_back(params, assignment);
      }
      for (const auto& p : instances) {
        const PartitionMetrics fast = partition_metrics(p);
        const PartitionMetrics slow = oracle::brute_force_metrics(p);
        o.expect(fast.max_degree == slow.max_degree && fast.imbalance == slow.imbalance &&
                     fast.part_sizes == slow.part_sizes,
                 "metrics differ on H(" + std::to_string(n) + "," + std::to_string(m) + ")");
        ++partitions;
      }

      for (int t = 0; t < 3; ++t) {
        const FiniteFunction f = ht::random_function(rng, integer_domain(m), n, ints({0, 1, 2, -5}));
        const GridPolynomial poly = interpolate(f);
        for (Rank r = 0; r < size; ++r) {
          std::vector<Rational> point;
          for (int d : ht::digits_of(r, m, n)) point.emplace_back(d);
          o.expect(poly.evaluate(point) == f.value(r), "interpolate then evaluate differs");
        }
        ++functions;
      }
    }
  }
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; ipow(static_cast<std::uint64_t>(m), n) <= 12 && n <= 12; ++n) {
      const auto brute = oracle::brute_force_independence_number(m, n);
      o.expect(independence_number(GraphParams(m, n)) == brute, "independence number differs");
      ++alphas;
      if (m == 1) break;
    }
  }
  o.detail = std::to_string(partitions) + " partitions, " + std::to_string(functions) + " functions, " +
             std::to_string(alphas) + " independence numbers";
  return o;
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hamsense_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string cli = HAMSENSE_CLI;
  const std::string base = (dir / "base.part").string();
  const std::string fn = (dir / "f.json").string();
  const std::string out = (dir / "artifact").string();

  // Inputs for file-based commands.
  run_capture(cli + " construct degree1 --m 3 --n 2 --out " + base);
  run_capture(cli + " fn lifted-tribes --m 3 --a 0 --s 2 --out " + fn);

  const std::vector<std::string> commands{
      "construct degree1 --m 4 --n 3 --verify",
      "construct complete --m 5 --d 1 --verify",
      "construct lift --in " + base + " --n 4 --d 2 --verify",
      "construct theorem1 --m 3 --d 2 --n 4 --verify",
      "construct subgraph --m 4 --n 3 --d 1 --verify",
      "metrics " + base + " --verify",
      "bounds --m 4 --n 8 --k 32768",
      "bounds --m 3 --n 9 --eps 1/9 --d 2",
      "--format csv bounds --m 4 --n 2 --d 5",
      "fn interpolate " + fn,
      "fn degree " + fn,
      "fn sensitivity " + fn,
      "fn decompose " + fn,
      "fn restrict " + fn,
      "fn verify " + fn,
      "fn tribes --s 2 --verify",
      "fn lifted-tribes --m 3 --a 0 --s 2 --verify",
      "oracle sigma --m 2 --n 3",
      "oracle subsets --m 3 --n 2 --k 5 --fix-first",
      "oracle functions --m 2 --n 2 --b 2",
      "oracle functions --m 4 --n 2 --b 2 --samples 200",
      "oracle metrics " + base,
      "report grid --m 3..5 --n 2,3 --d 1..2",
      "--format csv report grid --m 3..4 --n 2..3 --d 1..5",
  };
  int compared = 0;
  for (const auto& c : commands) {
    std::vector<std::string> runs;
    for (int rep = 0; rep < 3; ++rep) {
      std::filesystem::remove(out);
      const std::string stdout_text = run_capture(cli + " --seed 42 --out " + out + " " + c + " 2>&1");
      runs.push_back(stdout_text + "\n<artifact>\n" + slurp(out));
    }
    o.expect(runs[0] == runs[1] && runs[1] == runs[2], "output differs: " + c);
    o.expect(runs[0].find("<exit 0>") != std::string::npos, "nonzero exit: " + c);
    ++compared;
  }
  std::filesystem::remove_all(dir);
  o.detail = std::to_string(compared) + " commands x 3 runs, stdout and artifacts byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> body;
    double limit_seconds;  // 0: no limit
  };
  const std::vector<Criterion> criteria{
      {1, "degree-one construction", degree_one_construction, kLimitDegreeOne},
      {2, "degree-one instance (4,3)", four_three_instance, 0},
      {3, "complete-graph partition", complete_graph_partitions, 0},
      {4, "lifting map", lifting_map, 0},
      {5, "theorem sweep", theorem_sweep, 0},
      {6, "large low-degree subgraphs", large_subgraphs, 0},
      {7, "markov lower bound consistency", markov_consistency, 0},
      {8, "sensitivity theorem, exhaustive", sensitivity_theorem, kLimitSensitivity},
      {9, "tightness construction", tightness, 0},
      {10, "graph sensitivity oracle", graph_sensitivity, kLimitSigma},
      {11, "oracle equivalence", oracle_equivalence, 0},
      {12, "cli determinism", determinism, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.ok = false;
      o.problems.push_back("runtime limit " + std::to_string(c.limit_seconds) + " s exceeded");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- " << o.detail << " ["
              << timing << "]";
    for (const auto& p : o.problems) std::cout << " | " << p;
    std::cout << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
