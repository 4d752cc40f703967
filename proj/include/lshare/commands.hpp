#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lshare/error.hpp"
#include "lshare/report.hpp"
#include "lshare/scenario.hpp"

namespace lshare {

enum class Command { Eval, Simulate, Order, Allocate, Verify, Counterexample };

std::optional<Command> parse_command(std::string_view s);
const char* to_string(Command c) noexcept;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitConclusion = 4;
inline constexpr int kExitNumerical = 5;

int exit_code_for(ErrorKind kind) noexcept;

struct RunResult {
  int exit_code;
  std::string output;       // report bytes, possibly empty on error
  std::string diagnostics;  // human-readable, one line per message
};

// Default format: CSV for eval and simulate, JSON otherwise.
Format default_format(Command c) noexcept;

// Never throws; library errors become exit codes and diagnostics.
RunResult run(Command command, const Scenario& scenario, std::optional<Format> format = std::nullopt);

}  // namespace lshare
