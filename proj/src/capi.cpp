#include "lshare/lshare.h"

#include <new>
#include <string>

#include "lshare/commands.hpp"

struct lshare_scenario {
  lshare::Scenario value;
};

struct lshare_report {
  lshare::RunResult value;
};

struct lshare_distribution {
  lshare::LifetimeDistribution value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_diagnostic;

lshare_status record(lshare_status status, const std::string& message, const std::string& diagnostic = {}) {
  last_error = message;
  last_diagnostic = diagnostic;
  return status;
}

lshare_status status_for(lshare::ErrorKind kind) {
  using lshare::ErrorKind;
  switch (kind) {
    case ErrorKind::Config: return LSHARE_ERR_CONFIG;
    case ErrorKind::Domain:
    case ErrorKind::Specification: return LSHARE_ERR_DOMAIN;
    case ErrorKind::Support:
    case ErrorKind::Singularity:
    case ErrorKind::Accuracy: return LSHARE_ERR_NUMERICAL;
    case ErrorKind::Reproduction: return LSHARE_ERR_REPRODUCTION;
  }
  return LSHARE_ERR_INTERNAL;
}

template <class F>
lshare_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    last_diagnostic.clear();
    return LSHARE_OK;
  } catch (const lshare::Error& e) {
    return record(status_for(e.kind()), e.what(), e.diagnostic());
  } catch (const std::bad_alloc&) {
    return record(LSHARE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(LSHARE_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(LSHARE_ERR_INTERNAL, "unknown error");
  }
}

template <class Fn>
lshare_status evaluate(const lshare_distribution* d, double x, double* out, Fn fn) {
  if (!d || !out) return record(LSHARE_ERR_ARGUMENT, "null argument");
  return guard([&] { *out = fn(d->value, x); });
}

}  // namespace

extern "C" {

const char* lshare_version(void) { return "1.0.0"; }
const char* lshare_last_error(void) { return last_error.c_str(); }
const char* lshare_last_diagnostic(void) { return last_diagnostic.c_str(); }

lshare_status lshare_scenario_load_file(const char* path, lshare_scenario** out) {
  if (!path || !out) return record(LSHARE_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new lshare_scenario{lshare::load_scenario(path)}; });
}

lshare_status lshare_scenario_load_string(const char* json, lshare_scenario** out) {
  if (!json || !out) return record(LSHARE_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new lshare_scenario{lshare::parse_scenario(json)}; });
}

void lshare_scenario_free(lshare_scenario* scenario) { delete scenario; }

lshare_status lshare_scenario_set_quadrature_tolerance(lshare_scenario* scenario, double tol) {
  if (!scenario) return record(LSHARE_ERR_ARGUMENT, "null argument");
  if (!(tol > 0.0) || !(tol < 1.0))
    return record(LSHARE_ERR_CONFIG, "quadrature tolerance must lie in (0, 1)", "E_QUAD_TOL");
  scenario->value.quadrature.abs_tol = tol;
  scenario->value.quadrature.rel_tol = tol;
  scenario->value.verify.options.quadrature = scenario->value.quadrature;
  return LSHARE_OK;
}

lshare_status lshare_scenario_set_threads(lshare_scenario* scenario, unsigned threads) {
  if (!scenario) return record(LSHARE_ERR_ARGUMENT, "null argument");
  scenario->value.mc.threads = threads;
  if (scenario->value.verify.options.simulation) scenario->value.verify.options.simulation->threads = threads;
  return LSHARE_OK;
}

lshare_status lshare_run(const lshare_scenario* scenario, const char* command, lshare_format format,
                         lshare_report** out) {
  if (!scenario || !command || !out) return record(LSHARE_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  const auto cmd = lshare::parse_command(command);
  if (!cmd) return record(LSHARE_ERR_ARGUMENT, std::string("unknown command ") + command, "E_COMMAND");
  std::optional<lshare::Format> f;
  if (format == LSHARE_FORMAT_JSON) f = lshare::Format::Json;
  if (format == LSHARE_FORMAT_CSV) f = lshare::Format::Csv;
  return guard([&] { *out = new lshare_report{lshare::run(*cmd, scenario->value, f)}; });
}

int lshare_report_exit_code(const lshare_report* report) { return report ? report->value.exit_code : -1; }

const char* lshare_report_output(const lshare_report* report, size_t* length) {
  if (!report) return nullptr;
  if (length) *length = report->value.output.size();
  return report->value.output.c_str();
}

const char* lshare_report_diagnostics(const lshare_report* report) {
  return report ? report->value.diagnostics.c_str() : nullptr;
}

void lshare_report_free(lshare_report* report) { delete report; }

lshare_status lshare_distribution_from_json(const char* json, lshare_distribution** out) {
  if (!json || !out) return record(LSHARE_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new lshare_distribution{lshare::parse_distribution(json)}; });
}

void lshare_distribution_free(lshare_distribution* d) { delete d; }

lshare_status lshare_distribution_cdf(const lshare_distribution* d, double t, double* out) {
  return evaluate(d, t, out, [](const auto& x, double v) { return x.cdf(v); });
}

lshare_status lshare_distribution_survival(const lshare_distribution* d, double t, double* out) {
  return evaluate(d, t, out, [](const auto& x, double v) { return x.survival(v); });
}

lshare_status lshare_distribution_density(const lshare_distribution* d, double t, double* out) {
  return evaluate(d, t, out, [](const auto& x, double v) { return x.density(v).value; });
}

lshare_status lshare_distribution_hazard(const lshare_distribution* d, double t, double* out) {
  return evaluate(d, t, out, [](const auto& x, double v) { return x.hazard(v); });
}

lshare_status lshare_distribution_reversed_hazard(const lshare_distribution* d, double t, double* out) {
  return evaluate(d, t, out, [](const auto& x, double v) { return x.reversed_hazard(v); });
}

lshare_status lshare_distribution_quantile(const lshare_distribution* d, double p, double* out) {
  return evaluate(d, p, out, [](const auto& x, double v) { return x.quantile(v); });
}

}  // extern "C"
