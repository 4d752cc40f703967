#include "lshare/commands.hpp"

#include <algorithm>

namespace lshare {

namespace {

constexpr double kMonotoneSlack = 1e-9;

std::vector<std::size_t> allocations(const Scenario& s) {
  if (s.allocation) return {*s.allocation};
  std::vector<std::size_t> a;
  for (std::size_t i = 1; i <= s.instance.components.size(); ++i) a.push_back(i);
  return a;
}

[[noreturn]] void unsupported(Command c, Format f) {
  throw Error(ErrorKind::Config,
              std::string(to_string(c)) + " does not produce " + (f == Format::Csv ? "CSV" : "JSON") + " output",
              "E_FORMAT");
}

RunResult eval(const Scenario& s, Format f) {
  const std::vector<double> grid = s.grid.build();
  const std::vector<std::size_t> alloc = allocations(s);
  std::vector<std::vector<double>> curves;
  RunResult r{kExitOk, {}, {}};
  for (std::size_t i : alloc) {
    curves.push_back(reliability_curve(s.instance.system(s.structure, i), grid, s.quadrature));
    const auto& c = curves.back();
    for (std::size_t k = 1; k < c.size(); ++k)
      if (grid[k] >= grid[k - 1] && c[k] > c[k - 1] + kMonotoneSlack) {
        r.exit_code = kExitNumerical;
        r.diagnostics += "error[E_NONMONOTONE_SURVIVAL]: allocation " + std::to_string(i) +
                         " survival increases between t=" + format_number(grid[k - 1]) + " and t=" +
                         format_number(grid[k]) + "\n";
        break;
      }
  }
  if (f == Format::Csv) {
    std::vector<std::string> names;
    if (alloc.size() == 1)
      names.push_back("survival");
    else
      for (std::size_t i : alloc) names.push_back("survival_" + std::to_string(i));
    r.output = to_csv(curves_table(grid, curves, names));
  } else {
    ordered_json j;
    j["structure"] = to_string(s.structure);
    j["grid"] = grid;
    ordered_json cs = ordered_json::array();
    for (std::size_t i = 0; i < alloc.size(); ++i) cs.push_back({{"allocation", alloc[i]}, {"survival", curves[i]}});
    j["curves"] = std::move(cs);
    r.output = to_json(j);
  }
  return r;
}

RunResult simulate(const Scenario& s, Format f) {
  const std::size_t alloc = s.allocation.value_or(1);
  const SurvivalEstimate e = estimate_survival(s.instance.system(s.structure, alloc), s.grid.build(), s.mc);
  if (f == Format::Csv) return {kExitOk, to_csv(estimate_table(e)), {}};
  ordered_json j;
  j["structure"] = to_string(s.structure);
  j["allocation"] = alloc;
  j["samples"] = e.samples;
  j["seed"] = s.mc.seed;
  j["grid"] = e.grid;
  j["estimate"] = e.estimate;
  j["stderr"] = e.standard_error;
  return {kExitOk, to_json(j), {}};
}

RunResult order(const Scenario& s, Format f) {
  if (f != Format::Json) unsupported(Command::Order, f);
  if (s.instance.components.size() < 2)
    throw Error(ErrorKind::Config, "order comparisons need two components", "E_COMPONENTS");
  const auto& o = s.order;
  const LifetimeDistribution& a = s.instance.components[o.first - 1].lifetime;
  const LifetimeDistribution& b = s.instance.components[o.second - 1].lifetime;
  const std::vector<double> grid = order_grid(a, b, o.points);
  ordered_json j;
  j["first"] = o.first;
  j["second"] = o.second;
  j["first_distribution"] = a.describe();
  j["second_distribution"] = b.describe();
  ordered_json vs = ordered_json::array();
  for (Relation rel : o.relations)
    for (Direction dir : o.directions) vs.push_back(to_json_value(check_order(a, b, rel, dir, grid)));
  j["verdicts"] = std::move(vs);
  return {kExitOk, to_json(j), {}};
}

RunResult allocate(const Scenario& s, Format f) {
  const std::vector<double> grid = s.grid.build();
  const AllocationReport rep =
      allocation_table(s.instance.components, s.instance.spare, s.instance.alpha, s.structure, grid, s.quadrature);
  if (f == Format::Json) return {kExitOk, to_json(to_json_value(rep)), {}};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rep.curves.size(); ++i) names.push_back("allocation_" + std::to_string(i));
  return {kExitOk, to_csv(curves_table(grid, rep.curves, names)), {}};
}

RunResult verify(const Scenario& s, Format f) {
  if (f != Format::Json) unsupported(Command::Verify, f);
  if (!s.verify.theorem) throw Error(ErrorKind::Config, "verify needs verify.theorem", "E_MISSING_FIELD");
  const TheoremReport rep = verify_theorem_instance(*s.verify.theorem, s.instance, s.verify.options);
  RunResult r{kExitOk, to_json(to_json_value(rep)), {}};
  if (!rep.hypotheses_hold) {
    r.exit_code = kExitHypothesis;
    for (const auto& h : rep.hypotheses)
      if (h.role == HypothesisRole::Required && !h.verdict.holds)
        r.diagnostics += "hypothesis violated: " + h.group + " " + h.verdict.name + "\n";
    if (!rep.satisfied_alternative && std::any_of(rep.hypotheses.begin(), rep.hypotheses.end(), [](const Hypothesis& h) {
          return h.role == HypothesisRole::Alternative;
        }))
      r.diagnostics += "hypothesis violated: no alternative condition group holds\n";
  } else if (!rep.conclusion_holds) {
    r.exit_code = kExitConclusion;
    for (const auto& c : rep.conclusions)
      if (!c.verdict.holds)
        r.diagnostics += "conclusion violated: " + c.verdict.name + " at t=" + format_number(c.min_gap_at) +
                         " (gap " + format_number(c.min_gap) + ")\n";
  }
  return r;
}

RunResult counterexample(const Scenario& s, Format f) {
  if (f != Format::Json) unsupported(Command::Counterexample, f);
  if (!s.counterexample.id)
    throw Error(ErrorKind::Config, "counterexample needs counterexample.id", "E_MISSING_FIELD");
  VerifyOptions o = s.verify.options;
  o.quadrature = s.quadrature;
  const TheoremReport rep = reproduce_counterexample(*s.counterexample.id, s.instance, o);
  RunResult r{kExitOk, to_json(to_json_value(rep)), {}};
  if (rep.pattern_matches && !*rep.pattern_matches)
    r.diagnostics += "note: hypothesis pattern differs from the stated counterexample\n";
  return r;
}

}  // namespace

std::optional<Command> parse_command(std::string_view s) {
  for (Command c : {Command::Eval, Command::Simulate, Command::Order, Command::Allocate, Command::Verify,
                    Command::Counterexample})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Simulate: return "simulate";
    case Command::Order: return "order";
    case Command::Allocate: return "allocate";
    case Command::Verify: return "verify";
    case Command::Counterexample: return "counterexample";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain:
    case ErrorKind::Config:
    case ErrorKind::Specification: return kExitConfig;
    case ErrorKind::Reproduction: return kExitConclusion;
    case ErrorKind::Support:
    case ErrorKind::Singularity:
    case ErrorKind::Accuracy: return kExitNumerical;
  }
  return kExitNumerical;
}

Format default_format(Command c) noexcept {
  return c == Command::Eval || c == Command::Simulate ? Format::Csv : Format::Json;
}

RunResult run(Command command, const Scenario& s, std::optional<Format> format) {
  const Format f = format.value_or(default_format(command));
  try {
    switch (command) {
      case Command::Eval: return eval(s, f);
      case Command::Simulate: return simulate(s, f);
      case Command::Order: return order(s, f);
      case Command::Allocate: return allocate(s, f);
      case Command::Verify: return verify(s, f);
      case Command::Counterexample: return counterexample(s, f);
    }
  } catch (const Error& e) {
    const std::string code = e.diagnostic().empty() ? to_string(e.kind()) : e.diagnostic();
    return {exit_code_for(e.kind()), {}, "error[" + code + "]: " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitNumerical, {}, std::string("error[internal]: ") + e.what() + "\n"};
  }
  return {kExitConfig, {}, "error: unknown command\n"};
}

}  // namespace lshare
