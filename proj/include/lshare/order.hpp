#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lshare/dist.hpp"
#include "lshare/instances.hpp"
#include "lshare/verdict.hpp"

namespace lshare {

enum class Relation { St, Hr, Rhr };
enum class Direction { LessEq, GreaterEq };

const char* to_string(Relation r) noexcept;
const char* to_string(Direction d) noexcept;

inline constexpr double kOrderTolerance = 1e-10;

/// Result of testing a <=_rel b (or >=_rel) on a finite grid. Violations are
/// exact; dominance is certified only at the grid points.
struct OrderVerdict {
  Relation relation;
  Direction direction;
  bool holds;
  // st: survivals of the smaller / larger side at `at`.
  // hr, rhr: ratio at `from` and at `at`, with from < at and ratio(from) > ratio(at).
  std::optional<Witness> witness;
  std::size_t grid_points;
  double grid_min;
  double grid_max;
};

OrderVerdict check_order(const LifetimeDistribution& a, const LifetimeDistribution& b, Relation rel, Direction dir,
                         std::span<const double> grid);

// Ratio of the defining monotone quantity for (smaller, larger), as checked by check_order.
// hr: S_larger / S_smaller; rhr: F_larger / F_smaller. May be +inf; NaN where undefined.
double order_ratio(const LifetimeDistribution& smaller, const LifetimeDistribution& larger, Relation rel, double t);

// Log-uniform grid covering the union of both supports, up to the given quantile.
std::vector<double> order_grid(const LifetimeDistribution& a, const LifetimeDistribution& b, std::size_t points = 2049,
                               double upper_quantile = 0.999);

enum class DifferenceId { E0, E1, E2 };
const char* to_string(DifferenceId id) noexcept;

// E0: S_{X1+Y} - S_{X2+Y}; E1: S_{U1} - S_{U2} (series); E2: F_{V2} - F_{V1} (parallel).
double counterexample_difference(DifferenceId id, const Instance& instance, double t, const QuadratureConfig& q = {});
// Same, on the built-in counterexample instance for the id.
double counterexample_difference(DifferenceId id, double t, const QuadratureConfig& q = {});

struct NegativeWitness {
  double t;
  double value;
};

inline constexpr double kNegativeThreshold = 1e-10;

// Scan [lo, hi] on `resolution` points, refine the most negative cell by golden
// section, and return it if f < -1e-10 there.
std::optional<NegativeWitness> find_negative_witness(const std::function<double(double)>& f, double lo, double hi,
                                                     std::size_t resolution);

}  // namespace lshare
