#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lshare/instances.hpp"
#include "lshare/mcsim.hpp"
#include "lshare/order.hpp"
#include "lshare/quadrature.hpp"

namespace lshare {

// T2_*: cumulative-exposure theorems. C2_1 / C2_2: their chain corollaries.
// T3_*: general virtual ages. Cor3_2 / Cor3_3 / Cor3_4: chains of T3_2, T3_3, T3_4.
enum class TheoremId {
  T2_1,
  T2_2,
  T2_3,
  C2_1,
  C2_2,
  T3_1,
  T3_2,
  T3_3_same_model,
  T3_4_parallel,
  Cor3_2,
  Cor3_3,
  Cor3_4,
};

enum class CounterexampleId { CE2_1, CE2_2, CE2_4 };

const char* to_string(TheoremId id) noexcept;
const char* to_string(CounterexampleId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view s);
std::optional<CounterexampleId> parse_counterexample(std::string_view s);

enum class HypothesisRole {
  Required,       // must hold
  Alternative,    // every item of at least one alternative group must hold
  Informational,  // reported only
};
const char* to_string(HypothesisRole r) noexcept;

struct Hypothesis {
  std::string group;  // e.g. "(i)", "(iii)", "general form"
  HypothesisRole role;
  ConditionVerdict verdict;
};

struct HypothesisCheck {
  std::vector<Hypothesis> items;
  bool holds = true;
  std::optional<std::string> satisfied_alternative;
};

struct VerifyOptions {
  std::size_t grid_points = 2049;        // conclusion grid, linear on [0, horizon]
  std::size_t condition_points = 257;    // grid for model-function conditions
  double horizon_quantile = 0.999;
  std::optional<double> horizon;         // overrides the quantile-based horizon
  double slack = 1e-9;                   // gaps above -slack count as ties
  QuadratureConfig quadrature;
  std::optional<SimConfig> simulation;
  std::size_t simulation_points = 65;
};

// Largest `q` quantile over all components and the spare.
double conclusion_horizon(const Instance& instance, double q = 0.999);

HypothesisCheck check_hypotheses(TheoremId id, const Instance& instance, const VerifyOptions& options = {});

struct ConclusionVerdict {
  std::size_t first;   // 1-based allocations compared: first >=st second
  std::size_t second;
  ConditionVerdict verdict;  // witness: t, survival of first, survival of second
  double min_gap;            // min over the grid of first - second
  double min_gap_at;
};

struct SimulationAgreement {
  std::size_t allocation;
  std::size_t points;
  double within_3se;  // fraction of points with |analytic - estimate| <= 3 stderr
  double max_abs_z;
};

struct CounterexampleWitness {
  DifferenceId difference;
  double interval_lo;
  double interval_hi;
  std::size_t resolution;
  double t;
  double value;
};

struct TheoremReport {
  std::string id;
  std::string instance;
  std::vector<std::string> description;
  Structure structure;
  bool pair_only;  // conclusion about X_i (+) Y rather than the system
  std::vector<Hypothesis> hypotheses;
  bool hypotheses_hold;
  std::optional<std::string> satisfied_alternative;
  std::vector<ConclusionVerdict> conclusions;
  bool conclusion_holds;
  double grid_start;
  double grid_stop;
  std::size_t grid_points;
  double slack;
  QuadratureConfig quadrature;
  std::vector<SimulationAgreement> simulation;
  std::optional<CounterexampleWitness> witness;
  std::optional<bool> pattern_matches;  // counterexamples: hypothesis pattern as stated
};

TheoremReport verify_theorem_instance(TheoremId id, const Instance& instance, const VerifyOptions& options = {});

// Builds the built-in instance, checks its hypothesis pattern and searches for a
// negative value of the difference function with escalating resolution.
// Throws Error(Reproduction) if none is found.
TheoremReport reproduce_counterexample(CounterexampleId id, const VerifyOptions& options = {});
TheoremReport reproduce_counterexample(CounterexampleId id, const Instance& instance, const VerifyOptions& options = {});

// Random instance satisfying the hypotheses of T2_1, T2_2 or T2_3 by
// construction: exponential or Weibull (common shape >= 1) components with
// ordered parameters, power-law CEM factors g1 <= g2, CEM spare.
Instance random_cem_instance(TheoremId id, std::uint64_t seed);

}  // namespace lshare
