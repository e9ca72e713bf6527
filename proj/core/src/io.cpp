#include "hamsense/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "hamsense/errors.hpp"

namespace hamsense::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return numerator(q).convert_to<std::int64_t>();
  }
  return format_fraction(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const VertexSet& s) {
  return json{{"m", s.params().m()}, {"n", s.params().n()}, {"ranks", s.ranks()}};
}

VertexSet vertex_set_from_json(const json& j, std::uint64_t cap) {
  const GraphParams params(field<int>(j, "m"), field<int>(j, "n"));
  const auto ranks = field<std::vector<Rank>>(j, "ranks");
  if (!std::is_sorted(ranks.begin(), ranks.end()) || std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end()) {
    throw InvalidInput("vertex set ranks must be strictly increasing");
  }
  return VertexSet::from_ranks(params, ranks, cap);
}

json to_json(const Partition& p) {
  return json{{"m", p.params().m()}, {"n", p.params().n()}, {"assignment", p.assignment()}};
}

Partition partition_from_json(const json& j, std::uint64_t cap) {
  const GraphParams params(field<int>(j, "m"), field<int>(j, "n"));
  params.enumerable_count(cap);
  return Partition(params, field<std::vector<PartIndex>>(j, "assignment"));
}

json to_json(const PartitionMetrics& metrics, const GraphParams& params) {
  json j{{"maxDegree", metrics.max_degree},
         {"imbalance", to_u64(metrics.imbalance, "imbalance")},
         {"partSizes", metrics.part_sizes}};
  if (metrics.witness) {
    const Vertex v = unrank(*metrics.witness, params);
    j["witness"] = std::vector<int>(v.digits().begin(), v.digits().end());
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const FiniteFunction& f) {
  json a = json::array();
  for (const auto& q : f.domain()) a.push_back(rational_to_json(q));
  json b = json::array();
  for (const auto& q : f.range()) b.push_back(rational_to_json(q));
  return json{{"A", a}, {"B", b}, {"n", f.arity()}, {"values", f.values()}};
}

FiniteFunction function_from_json(const json& j, std::uint64_t cap) {
  const auto a_json = field<json>(j, "A");
  const auto b_json = field<json>(j, "B");
  if (!a_json.is_array() || !b_json.is_array()) throw InvalidInput("fields 'A' and 'B' must be arrays");
  std::vector<Rational> domain;
  for (const auto& x : a_json) domain.push_back(rational_from_json(x));
  std::vector<Rational> range;
  for (const auto& x : b_json) range.push_back(rational_from_json(x));
  const int n = field<int>(j, "n");
  if (n < 1) throw InvalidInput("function arity must be >= 1");
  if (!domain.empty()) GraphParams(static_cast<int>(domain.size()), n).enumerable_count(cap);
  return FiniteFunction(std::move(domain), std::move(range), n, field<std::vector<ValueIndex>>(j, "values"));
}

json to_json(const GridPolynomial& p) {
  json out = json::array();
  for (const auto& [exps, coeff] : p.sorted_terms()) {
    out.push_back(json{{"exponents", exps}, {"coefficient", format_fraction(coeff)}});
  }
  return out;
}

json to_json(const RestrictionWitness& w) {
  json pairs = json::array();
  for (const auto& [lo, hi] : w.retained) pairs.push_back(json::array({rational_to_json(lo), rational_to_json(hi)}));
  return json{{"rangeValue", rational_to_json(w.range_value)},
              {"functionDegree", w.function_degree},
              {"indicatorDegree", w.indicator_degree},
              {"targetSupport", w.target_support},
              {"retained", pairs},
              {"restricted", to_json(w.restricted)},
              {"restrictedDegree", w.restricted_degree},
              {"restrictedSensitivity", w.restricted_sensitivity},
              {"functionSensitivity", w.function_sensitivity}};
}

DocumentKind classify(const json& j) {
  if (!j.is_object()) return DocumentKind::Unknown;
  if (j.contains("assignment")) return DocumentKind::Partition;
  if (j.contains("ranks")) return DocumentKind::VertexSet;
  if (j.contains("values") && j.contains("A")) return DocumentKind::Function;
  return DocumentKind::Unknown;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace hamsense::io
