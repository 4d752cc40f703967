#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lshare {

struct Exponential {
  double rate;
};

struct Weibull {
  double shape;
  double scale;
};

// Survival (k t / sigma)^(-1/k) for t >= sigma / k; no mass below sigma / k.
struct ShiftedPareto {
  double k;
  double sigma;
};

// F(t) = sum_j coeffs[j] * t^j on [from, to). Coefficients are in absolute t,
// ascending in degree.
struct PolySegment {
  double from;
  double to;
  std::vector<double> coeffs;
};

struct PiecewisePolyCdf {
  std::vector<PolySegment> segments;
};

// Which one-sided limit to take at a breakpoint of F.
enum class Side { None, Left, Right };

struct DensityValue {
  double value;
  bool degenerate;  // t outside the support; value is 0
};

/// A nonnegative continuous lifetime. Immutable after construction.
class LifetimeDistribution {
public:
  using Params = std::variant<Exponential, Weibull, ShiftedPareto, PiecewisePolyCdf>;

  explicit LifetimeDistribution(Params params);

  static LifetimeDistribution exponential(double rate) { return LifetimeDistribution(Exponential{rate}); }
  static LifetimeDistribution weibull(double shape, double scale) {
    return LifetimeDistribution(Weibull{shape, scale});
  }
  static LifetimeDistribution shifted_pareto(double k, double sigma) {
    return LifetimeDistribution(ShiftedPareto{k, sigma});
  }
  static LifetimeDistribution piecewise(std::vector<PolySegment> segments) {
    return LifetimeDistribution(PiecewisePolyCdf{std::move(segments)});
  }

  double cdf(double t) const;
  double survival(double t) const;
  double log_survival(double t) const;

  // Throws at a breakpoint when side == Side::None.
  DensityValue density(double t, Side side = Side::None) const;

  // Right-continuous density with no breakpoint check, 0 outside the support.
  // This is the integrand path; quadrature nodes never sit on a breakpoint.
  double pdf(double t) const noexcept;

  // Hazard and reversed hazard take the right-hand density at breakpoints by default.
  double hazard(double t, Side side = Side::Right) const;
  double reversed_hazard(double t, Side side = Side::Right) const;

  // Smallest t with F(t) >= p, p in [0, 1).
  double quantile(double p) const;

  // Quantile of the lifetime conditioned to exceed `age`, driven by a uniform v in [0, 1).
  double conditional_quantile(double age, double v) const;

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  bool is_breakpoint(double t) const noexcept;

  const Params& params() const noexcept { return params_; }
  std::string describe() const;

private:
  const PolySegment* segment_at(double t) const noexcept;

  Params params_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::vector<double> breakpoints_;
};

enum class LogShape { LogConcave, LogConvex, Both, Neither };

struct LogShapeVerdict {
  LogShape shape;
  // Grid triples (t0, t1, t2) whose slopes of log survival break concavity / convexity.
  std::optional<std::array<double, 3>> concavity_violation;
  std::optional<std::array<double, 3>> convexity_violation;
};

inline constexpr double kShapeTolerance = 1e-10;

LogShapeVerdict classify_log_survival(const LifetimeDistribution& d, std::span<const double> grid);

// Grid of interior support points suitable for classify_log_survival.
std::vector<double> interior_grid(const LifetimeDistribution& d, std::size_t points = 257,
                                  double upper_quantile = 0.999);

const char* to_string(LogShape shape) noexcept;

}  // namespace lshare
