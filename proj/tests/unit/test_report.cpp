#include <gtest/gtest.h>

#include "lshare/instances.hpp"
#include "lshare/report.hpp"
#include "lshare/verify.hpp"

using namespace lshare;

TEST(Numbers, SeventeenSignificantDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(format_number(1e-7), "9.9999999999999995e-08");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, EmptyGridIsHeaderOnly) {
  const std::vector<double> grid;
  EXPECT_EQ(to_csv(curves_table(grid, {{}}, {"survival"})), "t,survival\n");
}

TEST(Csv, RowsWithLfEndings) {
  const std::vector<double> grid{0.0, 0.5};
  const std::string s = to_csv(curves_table(grid, {{1.0, 0.25}, {1.0, 0.5}}, {"a", "b"}));
  EXPECT_EQ(s, "t,a,b\n0,1,1\n0.5,0.25,0.5\n");
  EXPECT_EQ(s.find('\r'), std::string::npos);
}

TEST(Csv, EstimateTable) {
  const SurvivalEstimate e{{1.0}, {0.5}, {0.005}, 10000};
  EXPECT_EQ(to_csv(estimate_table(e)), "t,estimate,stderr\n1,0.5,0.0050000000000000001\n");
}

TEST(Json, FormattingAndNonFinite) {
  ordered_json j;
  j["b"] = 1.5;
  j["a"] = std::numeric_limits<double>::infinity();
  j["n"] = 3;
  j["list"] = ordered_json::array();
  j["s"] = "x\"y";
  EXPECT_EQ(to_json(j), "{\n  \"b\": 1.5,\n  \"a\": \"inf\",\n  \"n\": 3,\n  \"list\": [],\n  \"s\": \"x\\\"y\"\n}\n");
}

TEST(Json, HypothesisArrayMatchesChecks) {
  VerifyOptions o;
  o.grid_points = 65;
  const TheoremReport r = verify_theorem_instance(TheoremId::T2_3, builtin::example_2_3(), o);
  const ordered_json j = to_json_value(r);
  ASSERT_TRUE(j.at("hypotheses").is_array());
  EXPECT_EQ(j.at("hypotheses").size(), r.hypotheses.size());
  EXPECT_EQ(j.at("conclusions").size(), r.conclusions.size());
  EXPECT_EQ(j.at("id"), "T2_3");
  const std::string a = to_json(j), b = to_json(to_json_value(verify_theorem_instance(TheoremId::T2_3, builtin::example_2_3(), o)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  EXPECT_EQ(a.find('\r'), std::string::npos);
  EXPECT_TRUE(ordered_json::accept(a));
}

TEST(Json, WitnessFields) {
  const ordered_json j = to_json_value(Witness{2.0, 0.5, 0.25, 1.0});
  EXPECT_EQ(j.at("at"), 2.0);
  EXPECT_EQ(j.at("from"), 1.0);
  const ordered_json k = to_json_value(Witness{2.0, 0.5, 0.25, std::nullopt});
  EXPECT_TRUE(!k.contains("from") || k.at("from").is_null());
}
