#include <sstream>

#include <gtest/gtest.h>

#include "lshare/commands.hpp"

using namespace lshare;

namespace {

Scenario load(const char* name) { return load_scenario(std::string(LSHARE_SOURCE_DIR) + "/scenarios/" + name); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Commands, ParseNames) {
  for (Command c : {Command::Eval, Command::Simulate, Command::Order, Command::Allocate, Command::Verify,
                    Command::Counterexample})
    EXPECT_EQ(parse_command(to_string(c)), c);
  EXPECT_FALSE(parse_command("plot").has_value());
  EXPECT_EQ(default_format(Command::Eval), Format::Csv);
  EXPECT_EQ(default_format(Command::Verify), Format::Json);
}

TEST(Commands, ExitCodesPerErrorKind) {
  EXPECT_EQ(exit_code_for(ErrorKind::Config), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::Domain), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::Specification), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::Reproduction), 4);
  EXPECT_EQ(exit_code_for(ErrorKind::Singularity), 5);
  EXPECT_EQ(exit_code_for(ErrorKind::Accuracy), 5);
  EXPECT_EQ(exit_code_for(ErrorKind::Support), 5);
}

TEST(Commands, EvalClosedForm) {
  const RunResult r = run(Command::Eval, load("exp_pair_closed_form.json"));
  EXPECT_EQ(r.exit_code, 0) << r.diagnostics;
  const auto ls = lines(r.output);
  ASSERT_EQ(ls.size(), 202u);
  EXPECT_EQ(ls[0], "t,survival");
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const auto comma = ls[k].find(',');
    const double t = std::stod(ls[k].substr(0, comma)), s = std::stod(ls[k].substr(comma + 1));
    EXPECT_NEAR(s, 2 * std::exp(-t) - std::exp(-2 * t), 1e-6) << t;
  }
}

TEST(Commands, EvalJsonAndAllocations) {
  Scenario s = load("example_2_1.json");
  const RunResult csv = run(Command::Eval, s);
  EXPECT_EQ(lines(csv.output)[0], "t,survival_1,survival_2");
  const RunResult j = run(Command::Eval, s, Format::Json);
  EXPECT_EQ(j.exit_code, 0);
  const auto parsed = ordered_json::parse(j.output);
  EXPECT_EQ(parsed.at("curves").size(), 2u);
}

TEST(Commands, SimulateDeterministic) {
  Scenario s = load("exp_pair_closed_form.json");
  s.mc.samples = 20000;
  s.grid.points = 11;
  const RunResult a = run(Command::Simulate, s);
  s.mc.threads = 3;
  const RunResult b = run(Command::Simulate, s);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(lines(a.output)[0], "t,estimate,stderr");
}

TEST(Commands, OrderReport) {
  const RunResult r = run(Command::Order, load("ce_2_2.json"));
  ASSERT_EQ(r.exit_code, 0) << r.diagnostics;
  const auto j = ordered_json::parse(r.output);
  ASSERT_EQ(j.at("verdicts").size(), 6u);
  for (const auto& v : j.at("verdicts")) {
    if (v.at("relation") == "st" && v.at("direction") == "le") EXPECT_TRUE(v.at("holds").get<bool>());
    if (v.at("relation") == "hr" && v.at("direction") == "le") EXPECT_FALSE(v.at("holds").get<bool>());
  }
  const RunResult csv = run(Command::Order, load("ce_2_2.json"), Format::Csv);
  EXPECT_EQ(csv.exit_code, 2);
  EXPECT_NE(csv.diagnostics.find("E_FORMAT"), std::string::npos);
}

TEST(Commands, Allocate) {
  Scenario s = load("ce_2_1.json");
  s.grid.points = 41;
  const RunResult r = run(Command::Allocate, s);
  ASSERT_EQ(r.exit_code, 0) << r.diagnostics;
  const auto j = ordered_json::parse(r.output);
  EXPECT_EQ(j.at("comparisons").size(), 1u);
  EXPECT_EQ(lines(run(Command::Allocate, s, Format::Csv).output)[0], "t,allocation_1,allocation_2");
}

TEST(Commands, VerifyOutcomes) {
  Scenario ok = load("example_2_1.json");
  ok.verify.options.grid_points = 129;
  EXPECT_EQ(run(Command::Verify, ok).exit_code, 0);
  Scenario bad = load("ce_2_1.json");
  bad.verify.options.grid_points = 129;
  const RunResult r = run(Command::Verify, bad);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.diagnostics.find("hypothesis violated"), std::string::npos);
  EXPECT_FALSE(r.output.empty());
  EXPECT_EQ(run(Command::Verify, load("exp_pair_closed_form.json")).exit_code, 2);
}

TEST(Commands, CounterexampleOutcomes) {
  const RunResult a = run(Command::Counterexample, load("ce_2_1.json"));
  EXPECT_EQ(a.exit_code, 0) << a.diagnostics;
  const auto j = ordered_json::parse(a.output);
  EXPECT_LT(j.at("witness").at("value").get<double>(), -1e-6);
  const RunResult c = run(Command::Counterexample, load("ce_2_4.json"));
  EXPECT_EQ(c.exit_code, 4);
  EXPECT_NE(c.diagnostics.find("E_NOT_REPRODUCED"), std::string::npos);
}

TEST(Commands, ErrorsBecomeExitCodes) {
  Scenario s = load("exp_pair_closed_form.json");
  s.allocation = 5;
  const RunResult r = run(Command::Eval, s);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.output.empty());
  EXPECT_EQ(r.diagnostics.rfind("error[E_ALLOCATION]", 0), 0u);
}
