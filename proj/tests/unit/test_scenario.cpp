#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "lshare/error.hpp"
#include "lshare/instances.hpp"
#include "lshare/scenario.hpp"

using namespace lshare;

namespace {

const std::string kMinimal = R"({
  "alpha": 0.5,
  "components": [{"distribution": {"kind": "exponential", "rate": 1}}],
  "spare": {"distribution": {"kind": "exponential", "rate": 2}}
})";

std::string code_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Config);
    return e.diagnostic();
  }
  return "accepted";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

std::string path(const char* name) { return std::string(LSHARE_SOURCE_DIR) + "/scenarios/" + name; }

}  // namespace

TEST(Scenario, MinimalDefaults) {
  const Scenario s = parse_scenario(kMinimal);
  EXPECT_EQ(s.instance.components.size(), 1u);
  EXPECT_EQ(s.instance.alpha, 0.5);
  EXPECT_EQ(s.structure, Structure::Series);
  EXPECT_FALSE(s.allocation.has_value());
  EXPECT_EQ(s.grid.points, 201u);
  EXPECT_TRUE(s.instance.components[0].model.virtual_age.is_cem());
  EXPECT_FALSE(s.verify.theorem.has_value());
}

TEST(Scenario, RejectsUnknownFields) {
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\"", "\"alpah\": 1, \"alpha\"")), "E_UNKNOWN_FIELD");
  EXPECT_EQ(code_of(replace(kMinimal, "\"rate\": 1", "\"rate\": 1, \"scale\": 2")), "E_UNKNOWN_FIELD");
}

TEST(Scenario, DistinctCodesPerProblem) {
  EXPECT_EQ(code_of(replace(kMinimal, "0.5", "1.5")), "E_ALPHA_RANGE");
  EXPECT_EQ(code_of(replace(kMinimal, "{\"kind\": \"exponential\", \"rate\": 1}",
                            R"({"kind": "piecewise_poly_cdf", "segments": [
                               {"from": 0, "to": 1, "coeffs": [0, 1, -0.9]}, {"from": 1, "to": 2, "coeffs": [-0.8, 0.9]}]})")),
            "E_CDF_NONMONOTONE");
  EXPECT_EQ(code_of(replace(kMinimal, "{\"kind\": \"exponential\", \"rate\": 1}}",
                            R"({"kind": "exponential", "rate": 1},
                               "model": {"virtual_age": {"kind": "piecewise_linear", "knots": [[0, 0], [1, 2]]}}})")),
            "E_AGE_EXCEEDS_TIME");
  EXPECT_EQ(code_of(replace(kMinimal, "\"rate\": 1", "\"rate\": -1")), "E_DIST_PARAM");
  EXPECT_EQ(code_of(replace(kMinimal, "\"exponential\", \"rate\": 1", "\"gamma\", \"rate\": 1")), "E_UNKNOWN_KIND");
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\": 0.5,", "")), "E_MISSING_FIELD");
  EXPECT_EQ(code_of(replace(kMinimal, "0.5", "\"half\"")), "E_TYPE");
  EXPECT_EQ(code_of("{not json"), "E_JSON_PARSE");
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\"", "\"allocation\": 2, \"alpha\"")), "E_ALLOCATION");
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\"", "\"grid\": {\"start\": 2, \"stop\": 1, \"points\": 5}, \"alpha\"")),
            "E_GRID");
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\"", "\"mc\": {\"samples\": 0}, \"alpha\"")), "E_MC_SAMPLES");
  EXPECT_EQ(code_of(replace(kMinimal, "\"alpha\"", "\"verify\": {\"theorem\": \"T9\"}, \"alpha\"")), "E_UNKNOWN_KIND");
}

TEST(Scenario, MissingFileIsConfigError) {
  try {
    load_scenario("/nonexistent/scenario.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.diagnostic(), "E_CONFIG_IO");
  }
}

TEST(Scenario, ShippedFilesMatchBuiltInInstances) {
  const std::pair<const char*, Instance> cases[] = {
      {"example_2_1.json", builtin::example_2_1()},       {"example_2_2.json", builtin::example_2_2()},
      {"example_2_3.json", builtin::example_2_3()},       {"ce_2_1.json", builtin::counterexample_2_1()},
      {"ce_2_2.json", builtin::counterexample_2_2()},     {"ce_2_4.json", builtin::counterexample_2_4()},
  };
  for (const auto& [file, in] : cases) {
    const Scenario s = load_scenario(path(file));
    ASSERT_EQ(s.instance.components.size(), in.components.size()) << file;
    EXPECT_EQ(s.instance.alpha, in.alpha);
    for (std::size_t i = 0; i < in.components.size(); ++i) {
      const auto& a = s.instance.components[i];
      const auto& b = in.components[i];
      EXPECT_EQ(a.lifetime.describe(), b.lifetime.describe()) << file;
      for (double t : {0.3, 1.0, 2.5}) EXPECT_NEAR(a.lifetime.cdf(t), b.lifetime.cdf(t), 1e-15) << file;
      EXPECT_EQ(a.model.bind(in.alpha).scale(), b.model.bind(in.alpha).scale()) << file;
    }
    EXPECT_EQ(s.instance.spare.lifetime.describe(), in.spare.lifetime.describe());
    EXPECT_EQ(s.instance.spare.model.bind(1 - in.alpha).scale(), in.spare.model.bind(1 - in.alpha).scale());
  }
}

TEST(Scenario, SectionsParsed) {
  const Scenario s = load_scenario(path("ce_2_2.json"));
  EXPECT_EQ(s.verify.theorem, TheoremId::T2_2);
  EXPECT_EQ(s.counterexample.id, CounterexampleId::CE2_2);
  EXPECT_EQ(s.mc.seed, 20240601u);
  EXPECT_EQ(s.mc.samples, 1000000u);
  const Scenario p = load_scenario(path("example_2_3.json"));
  EXPECT_EQ(p.structure, Structure::Parallel);
}

TEST(Scenario, QuadratureFlowsIntoVerifyOptions) {
  const Scenario s = parse_scenario(
      replace(kMinimal, "\"alpha\"", "\"quadrature\": {\"abs_tol\": 1e-11, \"rel_tol\": 1e-10}, \"alpha\""));
  EXPECT_EQ(s.quadrature.abs_tol, 1e-11);
  EXPECT_EQ(s.verify.options.quadrature.rel_tol, 1e-10);
}

TEST(Distribution, ParsesStandaloneJson) {
  const auto d = parse_distribution(R"({"kind": "weibull", "shape": 2, "scale": 1})");
  EXPECT_NEAR(d.survival(1.0), std::exp(-1.0), 1e-15);
  EXPECT_THROW(parse_distribution(R"({"kind": "weibull"})"), Error);
}
