#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lshare/dist.hpp"
#include "lshare/model.hpp"
#include "lshare/quadrature.hpp"

namespace lshare {

struct Component {
  LifetimeDistribution lifetime;
  ModelFunctionPair model;
};

/// Two units sharing a load: X carries share alpha, Y carries 1 - alpha; the
/// survivor of the first failure switches to full load at its virtual age.
struct LoadSharePair {
  LifetimeDistribution x;
  LifetimeDistribution y;
  double alpha;
  ModelFunctionPair mx;  // {w, g}
  ModelFunctionPair my;  // {gamma, h}
};

enum class Structure { Series, Parallel };

struct SystemSpec {
  std::vector<Component> components;
  Component spare;
  double alpha;
  Structure structure;
  std::size_t allocation;  // 1-based index of the component sharing load with the spare

  void validate() const;
  LoadSharePair pair() const;
};

// Evaluates the pair survival with both model pairs bound once. Cheap to copy.
class PairSurvival {
public:
  explicit PairSurvival(const LoadSharePair& pair);

  double operator()(double t, const QuadratureConfig& q) const;

  // Points in (0, t) where some integrand factor has a kink.
  std::vector<double> split_points(double t) const;

private:
  LifetimeDistribution x_, y_;
  BoundModel bx_, by_;
  std::vector<double> mass_points_;  // quantiles of X* and Y*, added to the split points
};

double pair_survival(const LoadSharePair& pair, double t, const QuadratureConfig& q = {});
std::vector<double> pair_survival_curve(const LoadSharePair& pair, std::span<const double> grid,
                                        const QuadratureConfig& q = {});

// Series: P(U_i > t). Parallel: P(V_i <= t).
double series_survival(const SystemSpec& s, double t, const QuadratureConfig& q = {});
double parallel_cdf(const SystemSpec& s, double t, const QuadratureConfig& q = {});

// P(system lifetime > t) for either structure.
double system_reliability(const SystemSpec& s, double t, const QuadratureConfig& q = {});
std::vector<double> reliability_curve(const SystemSpec& s, std::span<const double> grid,
                                      const QuadratureConfig& q = {});

inline constexpr double kDominanceTolerance = 1e-9;

enum class Dominance { Tie, FirstDominates, SecondDominates, Crossing };
const char* to_string(Dominance d) noexcept;

struct GapPoint {
  double t;
  double first;
  double second;
};

struct PairwiseComparison {
  std::size_t first;   // 1-based allocation indices
  std::size_t second;
  Dominance relation;
  std::optional<GapPoint> first_below;   // largest shortfall of first vs second
  std::optional<GapPoint> second_below;  // largest shortfall of second vs first
  std::optional<double> sign_change;     // a time where the curves cross, refined by bisection
};

struct AllocationReport {
  Structure structure;
  std::vector<double> grid;
  std::vector<std::vector<double>> curves;  // reliability per allocation
  std::vector<PairwiseComparison> comparisons;
  std::optional<std::size_t> best;          // allocation that dominates or ties every other
  double tolerance;
};

AllocationReport allocation_table(const std::vector<Component>& components, const Component& spare, double alpha,
                                  Structure structure, std::span<const double> grid, const QuadratureConfig& q = {},
                                  double tolerance = kDominanceTolerance);

const char* to_string(Structure s) noexcept;

}  // namespace lshare
