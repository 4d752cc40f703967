#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lshare/lshare.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 5;

int fail(int code, const char* diagnostic, const std::string& message) {
  std::cerr << "error[" << (diagnostic && *diagnostic ? diagnostic : "E_CLI") << "]: " << message << "\n";
  return code;
}

// Unset or empty means no override.
bool env_tolerance(double& tol, std::string& raw) {
  for (const char* name : {"LSHARE_QUAD_TOL", "TOOL_QUAD_TOL"}) {
    const char* v = std::getenv(name);
    if (v && *v) {
      raw = v;
      char* end = nullptr;
      tol = std::strtod(v, &end);
      return end && *end == '\0';
    }
  }
  raw.clear();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability of load-sharing series and parallel systems"};
  app.set_version_flag("--version", std::string(lshare_version()));
  std::string command, config, out, format;
  unsigned threads = 0;
  bool threads_set = false;
  app.add_option("command", command, "eval | simulate | order | allocate | verify | counterexample")
      ->required()
      ->check(CLI::IsMember({"eval", "simulate", "order", "allocate", "verify", "counterexample"}));
  app.add_option("--config", config, "Scenario JSON file")->required();
  app.add_option("--out", out, "Write the report here instead of standard output");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "Simulation threads (results do not depend on it)")
      ->each([&](const std::string&) { threads_set = true; });
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  lshare_scenario* scenario = nullptr;
  if (lshare_scenario_load_file(config.c_str(), &scenario) != LSHARE_OK)
    return fail(kExitConfig, lshare_last_diagnostic(), lshare_last_error());

  double tol = 0.0;
  std::string raw;
  if (!env_tolerance(tol, raw)) {
    lshare_scenario_free(scenario);
    return fail(kExitConfig, "E_QUAD_TOL", "quadrature tolerance override is not a number: " + raw);
  }
  if (!raw.empty() && lshare_scenario_set_quadrature_tolerance(scenario, tol) != LSHARE_OK) {
    lshare_scenario_free(scenario);
    return fail(kExitConfig, lshare_last_diagnostic(), lshare_last_error());
  }
  if (threads_set) lshare_scenario_set_threads(scenario, threads);

  const lshare_format fmt = format == "json"  ? LSHARE_FORMAT_JSON
                            : format == "csv" ? LSHARE_FORMAT_CSV
                                              : LSHARE_FORMAT_DEFAULT;
  lshare_report* report = nullptr;
  const lshare_status st = lshare_run(scenario, command.c_str(), fmt, &report);
  lshare_scenario_free(scenario);
  if (st != LSHARE_OK) return fail(kExitNumerical, lshare_last_diagnostic(), lshare_last_error());

  const int code = lshare_report_exit_code(report);
  std::cerr << lshare_report_diagnostics(report);
  std::size_t length = 0;
  const char* text = lshare_report_output(report, &length);
  if (length > 0) {
    if (out.empty()) {
      std::fwrite(text, 1, length, stdout);
    } else {
      std::ofstream f(out, std::ios::binary);
      f.write(text, static_cast<std::streamsize>(length));
      if (!f) {
        lshare_report_free(report);
        return fail(kExitConfig, "E_OUTPUT_IO", "cannot write " + out);
      }
    }
  }
  lshare_report_free(report);
  return code;
}
