#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lshare {

// A concrete point where a claimed inequality or monotonicity fails.
// For pointwise claims lhs <= rhs is violated at `at`. For monotonicity claims
// `from` < `at` and f(from) = lhs > rhs = f(at).
struct Witness {
  double at;
  double lhs;
  double rhs;
  std::optional<double> from;
};

struct ConditionVerdict {
  std::string name;
  bool holds;
  std::optional<Witness> witness;
};

inline constexpr double kMonotoneTolerance = 1e-10;

using ScalarFn = std::function<double(double)>;

// f nondecreasing on the grid: every value within tol*max(1,|m|) of the running
// maximum m. The worst cell is refined by golden section.
ConditionVerdict check_nondecreasing(std::string name, const ScalarFn& f, std::span<const double> grid,
                                     double tol = kMonotoneTolerance);

// lhs(u) <= rhs(u) + tol*max(1,|rhs|) at every grid point, refined around the worst point.
ConditionVerdict check_pointwise_le(std::string name, const ScalarFn& lhs, const ScalarFn& rhs,
                                    std::span<const double> grid, double tol = kMonotoneTolerance);

// Minimizer of f on [a, b] by golden-section search.
double golden_section_min(const ScalarFn& f, double a, double b, int iterations = 60);

enum class Spacing { Linear, Log };

// `points` values from start to stop inclusive. Log spacing needs start > 0.
std::vector<double> make_grid(double start, double stop, std::size_t points, Spacing spacing);

}  // namespace lshare
