#include "lshare/verdict.hpp"

#include <algorithm>
#include <cmath>

#include "lshare/error.hpp"

namespace lshare {

double golden_section_min(const ScalarFn& f, double a, double b, int iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

ConditionVerdict check_nondecreasing(std::string name, const ScalarFn& f, std::span<const double> grid, double tol) {
  ConditionVerdict v{std::move(name), true, std::nullopt};
  if (grid.empty()) return v;
  double run_max = f(grid[0]);
  std::size_t run_arg = 0;
  double worst = 0.0;
  std::size_t worst_from = 0, worst_at = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double y = f(grid[i]);
    const double drop = run_max - y;
    if (drop > tol * std::max(1.0, std::abs(run_max)) && drop > worst) {
      worst = drop;
      worst_from = run_arg;
      worst_at = i;
    }
    if (y > run_max) {
      run_max = y;
      run_arg = i;
    }
  }
  if (worst_at == 0) return v;

  const double peak = f(grid[worst_from]);
  double at = grid[worst_at];
  double value = f(at);
  const double lo = std::max(grid[worst_from], grid[worst_at - 1]);
  const double hi = worst_at + 1 < grid.size() ? grid[worst_at + 1] : grid[worst_at];
  if (hi > lo) {
    const double x = golden_section_min(f, lo, hi);
    const double fx = f(x);
    if (x > grid[worst_from] && fx < value) {
      at = x;
      value = fx;
    }
  }
  v.holds = false;
  v.witness = Witness{at, peak, value, grid[worst_from]};
  return v;
}

ConditionVerdict check_pointwise_le(std::string name, const ScalarFn& lhs, const ScalarFn& rhs,
                                    std::span<const double> grid, double tol) {
  ConditionVerdict v{std::move(name), true, std::nullopt};
  double worst = 0.0;
  std::size_t worst_i = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double l = lhs(grid[i]);
    const double r = rhs(grid[i]);
    const double excess = l - r;
    if (excess > tol * std::max(1.0, std::abs(r)) && excess > worst) {
      worst = excess;
      worst_i = i;
    }
  }
  if (worst_i == grid.size()) return v;

  double at = grid[worst_i];
  const double lo = grid[worst_i > 0 ? worst_i - 1 : 0];
  const double hi = grid[worst_i + 1 < grid.size() ? worst_i + 1 : worst_i];
  if (hi > lo) {
    const auto gap = [&](double u) { return rhs(u) - lhs(u); };
    const double x = golden_section_min(gap, lo, hi);
    if (gap(x) < gap(at)) at = x;
  }
  v.holds = false;
  v.witness = Witness{at, lhs(at), rhs(at), std::nullopt};
  return v;
}

std::vector<double> make_grid(double start, double stop, std::size_t points, Spacing spacing) {
  if (points == 0) return {};
  if (!(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
    throw Error(ErrorKind::Domain, "grid needs finite start <= stop");
  if (points == 1) return {start};
  std::vector<double> g(points);
  if (spacing == Spacing::Linear) {
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = start + step * static_cast<double>(i);
  } else {
    if (!(start > 0.0)) throw Error(ErrorKind::Domain, "log-spaced grid needs start > 0");
    const double la = std::log(start), lb = std::log(stop);
    for (std::size_t i = 0; i < points; ++i)
      g[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  g.front() = start;
  g.back() = stop;
  return g;
}

}  // namespace lshare
