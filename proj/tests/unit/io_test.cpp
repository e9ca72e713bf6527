#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hamsense/errors.hpp"
#include "hamsense/io.hpp"
#include "hamsense/partition.hpp"
#include "hamsense/polysense.hpp"

namespace hamsense {
namespace {

using io::json;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hamsense_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST(Json, VertexSetRoundTrip) {
  const VertexSet s = low_degree_subgraph(3, 2, 3);
  const json j = io::to_json(s);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(io::vertex_set_from_json(j), s);
  EXPECT_EQ(io::classify(j), io::DocumentKind::VertexSet);
}

TEST(Json, VertexSetRejectsUnsortedOrDuplicateRanks) {
  EXPECT_THROW(io::vertex_set_from_json(json::parse(R"({"m":3,"n":2,"ranks":[4,1]})")), InvalidInput);
  EXPECT_THROW(io::vertex_set_from_json(json::parse(R"({"m":3,"n":2,"ranks":[1,1]})")), InvalidInput);
  EXPECT_THROW(io::vertex_set_from_json(json::parse(R"({"m":3,"n":2,"ranks":[9]})")), InvalidInput);
  EXPECT_THROW(io::vertex_set_from_json(json::parse(R"({"m":3,"ranks":[]})")), InvalidInput);
}

TEST(Json, PartitionRoundTrip) {
  const Partition p = degree_one_partition(4, 3);
  const json j = io::to_json(p);
  EXPECT_EQ(j["assignment"].size(), 64u);
  EXPECT_EQ(j["assignment"][44], 0);
  EXPECT_EQ(io::partition_from_json(j), p);
  EXPECT_EQ(io::classify(j), io::DocumentKind::Partition);
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"m":2,"n":1,"assignment":[0,2]})")), InvalidInput);
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"m":2,"n":1,"assignment":"x"})")), InvalidInput);
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"m":3,"n":9,"assignment":[]})"), 100), ResourceLimit);
}

TEST(Json, Metrics) {
  const Partition p = degree_one_partition(4, 3);
  const json j = io::to_json(partition_metrics(p), p.params());
  EXPECT_EQ(j["maxDegree"], 1);
  EXPECT_EQ(j["imbalance"], 2);
  EXPECT_EQ(j["partSizes"], json::parse("[16,17,16,15]"));
  EXPECT_TRUE(j["witness"].is_array());

  const Partition singletons = complete_graph_partition(4, 0);
  EXPECT_TRUE(io::to_json(partition_metrics(singletons), singletons.params())["witness"].is_array());
}

TEST(Json, FunctionRoundTripWithRationals) {
  const FiniteFunction f({Rational(0), Rational(1, 2), Rational(-3)}, {Rational(7), Rational(-2, 5)}, 1, {1, 0, 1});
  const json j = io::to_json(f);
  EXPECT_EQ(j["A"], json::parse(R"([0,"1/2",-3])"));
  EXPECT_EQ(j["B"], json::parse(R"([7,"-2/5"])"));
  EXPECT_EQ(io::function_from_json(j), f);
  EXPECT_EQ(io::classify(j), io::DocumentKind::Function);
  EXPECT_THROW(io::function_from_json(json::parse(R"({"A":[0,0],"B":[0,1],"n":1,"values":[0,1]})")), InvalidInput);
  EXPECT_THROW(io::function_from_json(json::parse(R"({"A":[0,1],"B":[0,1],"n":1,"values":[0]})")), InvalidInput);
  EXPECT_THROW(io::function_from_json(json::parse(R"({"A":[0,1.5],"B":[0,1],"n":1,"values":[0,1]})")), InvalidInput);
  EXPECT_THROW(io::function_from_json(json::parse(R"({"A":["1/0"],"B":[0],"n":1,"values":[0]})")), InvalidInput);
}

TEST(Json, Polynomial) {
  const FiniteFunction parity(integer_domain(2), integer_domain(2), 2, {0, 1, 1, 0});
  const json j = io::to_json(interpolate(parity));
  EXPECT_EQ(j, json::parse(R"([{"exponents":[0,1],"coefficient":"1/1"},
                               {"exponents":[1,0],"coefficient":"1/1"},
                               {"exponents":[1,1],"coefficient":"-2/1"}])"));
}

TEST(Json, RestrictionWitness) {
  const auto w = boolean_restriction_witness(lifted_tribes(integer_domain(3), 0, 2));
  const json j = io::to_json(w);
  EXPECT_EQ(j["targetSupport"], 4);
  EXPECT_EQ(j["retained"].size(), 4u);
  EXPECT_EQ(io::function_from_json(j["restricted"]), w.restricted);
}

TEST(Json, ClassifyUnknown) {
  EXPECT_EQ(io::classify(json::parse("[1,2]")), io::DocumentKind::Unknown);
  EXPECT_EQ(io::classify(json::parse(R"({"foo":1})")), io::DocumentKind::Unknown);
}

TEST_F(TempDir, FileRoundTripIsCompactWithNewline) {
  const auto path = dir_ / "p.part";
  const json j = io::to_json(degree_one_partition(3, 2));
  io::write_json_file(path, j);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, j.dump() + "\n");
  EXPECT_EQ(io::read_json_file(path), j);
}

TEST_F(TempDir, ReadErrors) {
  EXPECT_THROW(io::read_json_file(dir_ / "missing.json"), InvalidInput);
  const auto bad = dir_ / "bad.json";
  std::ofstream(bad) << "{not json";
  EXPECT_THROW(io::read_json_file(bad), InvalidInput);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(format_fraction(Rational(3)), "3/1");
  EXPECT_EQ(format_fraction(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(format_rational(Rational(3)), "3");
  EXPECT_EQ(format_rational(Rational(64, 3)), "64/3");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_THROW(to_u64(big_pow(2, 64), "x"), ResourceLimit);
}

}  // namespace
}  // namespace hamsense
