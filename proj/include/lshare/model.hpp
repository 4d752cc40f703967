#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lshare/verdict.hpp"

namespace lshare {

struct IdentityScale {};
struct PowerScale {
  double p;
};
// Fixed factor, independent of the share. Used for the counterexample slices
// where only the numeric value g(alpha) is given.
struct ConstantScale {
  double c;
};

/// Load-scale function g(.) of the accelerated life model, F_{X*}(t) = F_X(g(alpha) t).
class LoadScale {
public:
  using Kind = std::variant<IdentityScale, PowerScale, ConstantScale>;

  explicit LoadScale(Kind kind);
  static LoadScale identity() { return LoadScale(IdentityScale{}); }
  static LoadScale power(double p) { return LoadScale(PowerScale{p}); }
  static LoadScale constant(double c) { return LoadScale(ConstantScale{c}); }

  // Factor at a load share in [0, 1].
  double operator()(double share) const;
  bool strictly_increasing() const noexcept { return !std::holds_alternative<ConstantScale>(kind_); }
  const Kind& kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

struct CemAge {};
struct LinearAge {
  double c;
};
// Knots (u, w) starting at (0, 0); continued past the last knot with the last slope.
struct PiecewiseLinearAge {
  std::vector<std::pair<double, double>> knots;
};

/// Virtual age after switching to full load: 0 <= w(u) <= u, nondecreasing.
class VirtualAge {
public:
  using Kind = std::variant<CemAge, LinearAge, PiecewiseLinearAge>;

  explicit VirtualAge(Kind kind);
  static VirtualAge cem() { return VirtualAge(CemAge{}); }
  static VirtualAge linear(double c) { return VirtualAge(LinearAge{c}); }
  static VirtualAge piecewise_linear(std::vector<std::pair<double, double>> knots) {
    return VirtualAge(PiecewiseLinearAge{std::move(knots)});
  }

  bool is_cem() const noexcept { return std::holds_alternative<CemAge>(kind_); }
  const Kind& kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// Model functions with the share fixed: the factor g(alpha) and a concrete w(u).
class BoundModel {
public:
  struct Piece {
    double u0;
    double w0;
    double slope;
  };

  BoundModel(double scale, std::vector<Piece> pieces);

  double scale() const noexcept { return scale_; }
  double age(double u) const noexcept;

  // w(u) == scale * u identically; enables the cumulative-exposure simplification.
  bool age_is_scaled_time() const noexcept { return scaled_time_; }

  // Interior kinks of w.
  std::vector<double> knots() const;

  // u in (lo, hi) with offset + direction*u + w(u) == level.
  void solve(double offset, double direction, double level, double lo, double hi, std::vector<double>& out) const;

private:
  double scale_;
  std::vector<Piece> pieces_;
  bool scaled_time_;
};

/// {w, g} for a component, or {gamma, h} for the spare.
struct ModelFunctionPair {
  VirtualAge virtual_age;
  LoadScale load_scale;

  // Resolve at the share this unit carries: alpha for a component, 1 - alpha for the spare.
  BoundModel bind(double share) const;
};

ModelFunctionPair cem_pair(LoadScale scale, double alpha);

double check_share(double alpha);

struct SpareConditions {
  ConditionVerdict age_within_bounds;   // 0 <= gamma(u) <= u
  ConditionVerdict age_nondecreasing;   // gamma nondecreasing
  ConditionVerdict residual_increasing; // u - gamma(u) nondecreasing
  ConditionVerdict excess_increasing;   // gamma(u) - h(1-alpha) u nondecreasing

  bool all() const noexcept {
    return age_within_bounds.holds && age_nondecreasing.holds && residual_increasing.holds && excess_increasing.holds;
  }
  std::vector<ConditionVerdict> list() const {
    return {age_within_bounds, age_nondecreasing, residual_increasing, excess_increasing};
  }
};

SpareConditions check_spare_conditions(const VirtualAge& gamma, const LoadScale& h, double alpha,
                                       std::span<const double> grid);

struct ModelPairOrdering {
  ConditionVerdict scale_le;             // g1(alpha) <= g2(alpha)
  ConditionVerdict age_le;               // w1(u) <= w2(u)
  ConditionVerdict scaled_time_le_age2;  // g1(alpha) u <= w2(u)
  ConditionVerdict scaled_time_le_age1;  // g1(alpha) u <= w1(u)
  ConditionVerdict age2_le_age1;         // w2(u) <= w1(u)

  std::vector<ConditionVerdict> list() const {
    return {scale_le, age_le, scaled_time_le_age2, scaled_time_le_age1, age2_le_age1};
  }
};

ModelPairOrdering check_ordering_of_model_pairs(const ModelFunctionPair& m1, const ModelFunctionPair& m2, double alpha,
                                                std::span<const double> grid);

// w(u) == g(share) u on the grid (the cumulative exposure form).
ConditionVerdict check_scaled_time_age(std::string name, const ModelFunctionPair& m, double share,
                                       std::span<const double> grid);

}  // namespace lshare
