#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome cli(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " '" + std::string(LSHARE_CLI_PATH) + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Outcome o{-1, {}};
  if (!p) return o;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) o.out.append(buf, n);
  const int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string config(const char* name) {
  return "--config '" + std::string(LSHARE_SOURCE_DIR) + "/scenarios/" + name + "'";
}

}  // namespace

TEST(Cli, EvalClosedForm) {
  const Outcome o = cli("eval " + config("exp_pair_closed_form.json"));
  ASSERT_EQ(o.code, 0);
  std::size_t rows = 0;
  for (char c : o.out) rows += c == '\n';
  EXPECT_EQ(rows, 202u);
  const auto at = o.out.find("\n1,");
  ASSERT_NE(at, std::string::npos);
  EXPECT_NEAR(std::stod(o.out.substr(at + 3)), 0.600424, 1e-6);
}

TEST(Cli, VerifyExamples) {
  for (const char* f : {"example_2_1.json", "example_2_2.json", "example_2_3.json"})
    EXPECT_EQ(cli("verify " + config(f)).code, 0) << f;
}

TEST(Cli, VerifyOnCounterexamplesReportsHypothesis) {
  for (const char* f : {"ce_2_1.json", "ce_2_2.json", "ce_2_4.json"}) EXPECT_EQ(cli("verify " + config(f)).code, 3) << f;
}

TEST(Cli, Counterexamples) {
  EXPECT_EQ(cli("counterexample " + config("ce_2_1.json")).code, 0);
  EXPECT_EQ(cli("counterexample " + config("ce_2_2.json")).code, 0);
  EXPECT_EQ(cli("counterexample " + config("ce_2_4.json")).code, 4);
}

TEST(Cli, UsageAndConfigErrors) {
  EXPECT_EQ(cli("plot " + config("ce_2_1.json")).code, 2);
  EXPECT_EQ(cli("eval").code, 2);
  EXPECT_EQ(cli("eval --config /nonexistent.json").code, 2);
  EXPECT_EQ(cli("order --format csv " + config("ce_2_1.json")).code, 2);
  EXPECT_EQ(cli("eval " + config("exp_pair_closed_form.json"), "LSHARE_QUAD_TOL=abc").code, 2);
}

TEST(Cli, EnvironmentToleranceAccepted) {
  const Outcome a = cli("eval " + config("exp_pair_closed_form.json"), "LSHARE_QUAD_TOL=1e-12");
  const Outcome b = cli("eval " + config("exp_pair_closed_form.json"), "TOOL_QUAD_TOL=1e-12");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "lshare_cli_out.json";
  const Outcome a = cli("order " + config("ce_2_2.json"));
  ASSERT_EQ(cli("order " + config("ce_2_2.json") + " --out '" + path + "'").code, 0);
  FILE* f = std::fopen(path.c_str(), "rb");
  ASSERT_NE(f, nullptr);
  std::string content;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;) content.append(buf, n);
  std::fclose(f);
  EXPECT_EQ(content, a.out);
}
