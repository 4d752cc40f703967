#include "lshare/order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lshare/error.hpp"

namespace lshare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio(double num, double den) {
  if (den > 0.0) return num / den;
  return num > 0.0 ? kInf : std::numeric_limits<double>::quiet_NaN();
}

bool significant_drop(double high, double low, double tol) {
  if (high == kInf) return low != kInf;
  return high - low > tol * std::max(1.0, std::abs(high));
}

OrderVerdict check_ratio_monotone(const LifetimeDistribution& small, const LifetimeDistribution& large, Relation rel,
                                  Direction dir, std::span<const double> grid) {
  // Anchor the sequence where the ratio is exactly 1: t = 0 for survivals,
  // the far end of both supports for CDFs.
  struct Point {
    double t;
    double r;
  };
  std::vector<Point> pts;
  pts.reserve(grid.size() + 1);
  if (rel == Relation::Hr) pts.push_back({0.0, 1.0});
  for (double t : grid) {
    const double r = order_ratio(small, large, rel, t);
    if (!std::isnan(r)) pts.push_back({t, r});
  }
  if (rel == Relation::Rhr) {
    double far = std::max(small.upper(), large.upper());
    if (!std::isfinite(far)) {
      far = 0.0;
      for (const auto* d : {&small, &large})
        far = std::max(far, std::isfinite(d->upper()) ? d->upper() : d->quantile(1.0 - 1e-12));
    }
    if (pts.empty() || far > pts.back().t) pts.push_back({far, 1.0});
  }
  if (pts.size() < 2) throw Error(ErrorKind::Domain, "no grid point where the order ratio is defined");

  OrderVerdict v{rel, dir, true, std::nullopt, grid.size(), grid.front(), grid.back()};
  std::size_t peak = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (significant_drop(pts[peak].r, pts[i].r, kOrderTolerance)) {
      // Localize the drop by bisection while keeping at least half of it.
      double from = pts[peak].t, at = pts[i].t;
      double rf = pts[peak].r, ra = pts[i].r;
      for (int it = 0; it < 60 && std::isfinite(rf); ++it) {
        const double mid = 0.5 * (from + at);
        if (!(mid > from && mid < at)) break;
        const double rm = order_ratio(small, large, rel, mid);
        if (std::isnan(rm)) break;
        const double need = std::max(kOrderTolerance * std::max(1.0, std::abs(rf)), 0.5 * (rf - ra));
        if (rf - rm > need)
          at = mid, ra = rm;
        else if (rm - ra > need)
          from = mid, rf = rm;
        else
          break;
      }
      v.holds = false;
      v.witness = Witness{at, rf, ra, from};
      return v;
    }
    if (pts[i].r > pts[peak].r) peak = i;
  }
  return v;
}

}  // namespace

double order_ratio(const LifetimeDistribution& smaller, const LifetimeDistribution& larger, Relation rel, double t) {
  if (rel == Relation::Hr) return ratio(larger.survival(t), smaller.survival(t));
  if (rel == Relation::Rhr) return ratio(larger.cdf(t), smaller.cdf(t));
  throw Error(ErrorKind::Domain, "order_ratio is defined for hr and rhr only");
}

OrderVerdict check_order(const LifetimeDistribution& a, const LifetimeDistribution& b, Relation rel, Direction dir,
                         std::span<const double> grid) {
  if (grid.size() < 3) throw Error(ErrorKind::Domain, "order check needs at least 3 grid points");
  const LifetimeDistribution& small = dir == Direction::LessEq ? a : b;
  const LifetimeDistribution& large = dir == Direction::LessEq ? b : a;
  if (rel != Relation::St) return check_ratio_monotone(small, large, rel, dir, grid);

  const ConditionVerdict c = check_pointwise_le(
      "st", [&](double t) { return small.survival(t); }, [&](double t) { return large.survival(t); }, grid,
      kOrderTolerance);
  return OrderVerdict{rel, dir, c.holds, c.witness, grid.size(), grid.front(), grid.back()};
}

std::vector<double> order_grid(const LifetimeDistribution& a, const LifetimeDistribution& b, std::size_t points,
                               double upper_quantile) {
  double hi = 0.0;
  for (const auto* d : {&a, &b})
    hi = std::max(hi, std::isfinite(d->upper()) ? d->upper() : d->quantile(upper_quantile));
  const double lo_support = std::min(a.lower(), b.lower());
  const double lo = lo_support > 0.0 ? lo_support : hi * 1e-4;
  return make_grid(lo, hi, points, Spacing::Log);
}

double counterexample_difference(DifferenceId id, const Instance& in, double t, const QuadratureConfig& q) {
  if (in.components.size() < 2)
    throw Error(ErrorKind::Specification, "difference functions compare allocations 1 and 2");
  switch (id) {
    case DifferenceId::E0: return pair_survival(in.pair(1), t, q) - pair_survival(in.pair(2), t, q);
    case DifferenceId::E1:
      return series_survival(in.system(Structure::Series, 1), t, q) -
             series_survival(in.system(Structure::Series, 2), t, q);
    case DifferenceId::E2:
      return parallel_cdf(in.system(Structure::Parallel, 2), t, q) -
             parallel_cdf(in.system(Structure::Parallel, 1), t, q);
  }
  return 0.0;
}

double counterexample_difference(DifferenceId id, double t, const QuadratureConfig& q) {
  switch (id) {
    case DifferenceId::E0: return counterexample_difference(id, builtin::counterexample_2_1(), t, q);
    case DifferenceId::E1: return counterexample_difference(id, builtin::counterexample_2_2(), t, q);
    case DifferenceId::E2: return counterexample_difference(id, builtin::counterexample_2_4(), t, q);
  }
  return 0.0;
}

std::optional<NegativeWitness> find_negative_witness(const std::function<double(double)>& f, double lo, double hi,
                                                     std::size_t resolution) {
  if (!(hi >= lo)) throw Error(ErrorKind::Domain, "witness interval is empty");
  if (resolution < 16) throw Error(ErrorKind::Domain, "witness scan needs at least 16 points");
  const std::vector<double> grid = make_grid(lo, hi, resolution, Spacing::Linear);
  std::size_t best = 0;
  double best_value = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double t = grid[best];
  const double a = grid[best > 0 ? best - 1 : 0];
  const double b = grid[std::min(best + 1, grid.size() - 1)];
  if (b > a) {
    const double x = golden_section_min(f, a, b);
    const double fx = f(x);
    if (fx < best_value) {
      t = x;
      best_value = fx;
    }
  }
  if (best_value < -kNegativeThreshold) return NegativeWitness{t, best_value};
  return std::nullopt;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::St: return "st";
    case Relation::Hr: return "hr";
    case Relation::Rhr: return "rhr";
  }
  return "?";
}

const char* to_string(Direction d) noexcept { return d == Direction::LessEq ? "le" : "ge"; }

const char* to_string(DifferenceId id) noexcept {
  switch (id) {
    case DifferenceId::E0: return "e0";
    case DifferenceId::E1: return "e1";
    case DifferenceId::E2: return "e2";
  }
  return "?";
}

}  // namespace lshare
