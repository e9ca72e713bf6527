#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hamsense/grid_poly.hpp"
#include "hamsense/hamming.hpp"
#include "hamsense/partition.hpp"
#include "hamsense/polysense.hpp"

namespace hamsense::io {

using nlohmann::json;

// {m, n, ranks: sorted member ranks}
json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j, std::uint64_t cap = kDefaultVertexCap);

// {m, n, assignment: part index per rank}
json to_json(const Partition& p);
Partition partition_from_json(const json& j, std::uint64_t cap = kDefaultVertexCap);

// {maxDegree, imbalance, partSizes, witness: digits of a vertex attaining maxDegree, or null}
json to_json(const PartitionMetrics& metrics, const GraphParams& params);

// {A, B, n, values}; A and B entries are integers or "p/q" strings.
json to_json(const FiniteFunction& f);
FiniteFunction function_from_json(const json& j, std::uint64_t cap = kDefaultVertexCap);

// [{exponents, coefficient: "p/q"}] by total degree, then lexicographic exponents.
json to_json(const GridPolynomial& p);

json to_json(const RestrictionWitness& w);

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

enum class DocumentKind { VertexSet, Partition, Function, Unknown };
DocumentKind classify(const json& j);

json read_json_file(const std::filesystem::path& path);
// Compact JSON plus trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace hamsense::io
