#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lshare/instances.hpp"
#include "lshare/mcsim.hpp"
#include "lshare/order.hpp"
#include "lshare/verify.hpp"

namespace lshare {

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  std::size_t points = 201;
  Spacing spacing = Spacing::Linear;

  std::vector<double> build() const { return make_grid(start, stop, points, spacing); }
};

struct OrderOptions {
  std::size_t first = 1;
  std::size_t second = 2;
  std::vector<Relation> relations = {Relation::St, Relation::Hr, Relation::Rhr};
  std::vector<Direction> directions = {Direction::LessEq, Direction::GreaterEq};
  std::size_t points = 2049;
};

struct VerifySettings {
  std::optional<TheoremId> theorem;
  VerifyOptions options;
  bool simulate = false;
};

struct CounterexampleSettings {
  std::optional<CounterexampleId> id;
};

/// A validated scenario file.
struct Scenario {
  Instance instance;
  Structure structure = Structure::Series;
  std::optional<std::size_t> allocation;  // 1-based; all allocations when absent
  GridSpec grid;
  QuadratureConfig quadrature;
  SimConfig mc;
  OrderOptions order;
  VerifySettings verify;
  CounterexampleSettings counterexample;
};

// Throws Error(Config) with a diagnostic code on any schema or domain violation.
// Unknown fields are rejected.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

// Distribution in the scenario schema, e.g. {"kind":"exponential","rate":1}.
LifetimeDistribution parse_distribution(const std::string& json_text);

}  // namespace lshare
