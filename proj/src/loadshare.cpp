#include "lshare/loadshare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lshare/error.hpp"

namespace lshare {

void SystemSpec::validate() const {
  check_share(alpha);
  if (components.empty()) throw Error(ErrorKind::Domain, "system needs at least one component", "E_COMPONENTS");
  if (allocation < 1 || allocation > components.size())
    throw Error(ErrorKind::Domain, "allocation index " + std::to_string(allocation) + " outside 1.." +
                                       std::to_string(components.size()),
                "E_ALLOCATION");
}

LoadSharePair SystemSpec::pair() const {
  validate();
  const Component& c = components[allocation - 1];
  return LoadSharePair{c.lifetime, spare.lifetime, alpha, c.model, spare.model};
}

PairSurvival::PairSurvival(const LoadSharePair& pair)
    : x_(pair.x), y_(pair.y), bx_(pair.mx.bind(check_share(pair.alpha))), by_(pair.my.bind(1.0 - pair.alpha)) {
  for (const auto& [d, scale] : {std::pair{&x_, bx_.scale()}, std::pair{&y_, by_.scale()}}) {
    if (!(scale > 0.0)) continue;
    for (double p : {1e-3, 0.1, 0.5, 0.9, 0.99, 0.999, 1 - 1e-4, 1 - 1e-6, 1 - 1e-8, 1 - 1e-10})
      mass_points_.push_back(d->quantile(p) / scale);
  }
}

std::vector<double> PairSurvival::split_points(double t) const {
  std::vector<double> s;
  const auto add_images = [&](const LifetimeDistribution& d, const BoundModel& own) {
    for (double b : d.breakpoints()) {
      if (own.scale() > 0.0) s.push_back(b / own.scale());
      own.solve(0.0, 0.0, b, 0.0, t, s);   // w(u) = b
      own.solve(t, -1.0, b, 0.0, t, s);    // t - u + w(u) = b
    }
  };
  add_images(x_, bx_);
  add_images(y_, by_);
  for (double k : bx_.knots()) s.push_back(k);
  for (double k : by_.knots()) s.push_back(k);
  s.insert(s.end(), mass_points_.begin(), mass_points_.end());
  std::erase_if(s, [t](double u) { return !(u > 0.0 && u < t); });
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

// Contribution of the paths where `partner` fails first at u and `survivor`
// finishes the mission alone at full load from its virtual age.
double switch_integral(const LifetimeDistribution& survivor, const BoundModel& bs, const LifetimeDistribution& partner,
                       const BoundModel& bp, double t, std::span<const double> splits, const QuadratureConfig& q,
                       const char* label) {
  const double hp = bp.scale();
  if (hp == 0.0) return 0.0;  // partner cannot fail under zero load
  const double gs = bs.scale();
  const bool collapse = bs.age_is_scaled_time();

  auto integrand = [&](double u) -> double {
    const double dens = hp * partner.pdf(hp * u);
    if (dens == 0.0) return 0.0;
    const double w = bs.age(u);
    const double tail = survivor.survival(std::max(0.0, t - u + w));
    if (collapse) return dens * tail;
    const double before = survivor.survival(gs * u);
    if (before == 0.0) return 0.0;
    const double at_switch = survivor.survival(w);
    if (at_switch == 0.0)
      throw Error(ErrorKind::Singularity,
                  std::string(label) + ": survival at the virtual age is 0 at u=" + std::to_string(u));
    return dens * before * (tail / at_switch);
  };

  const QuadratureResult r = integrate(integrand, 0.0, t, splits, q);
  if (!r.converged)
    throw AccuracyError(std::string(label) + " did not converge at t=" + std::to_string(t), r.value, r.error);
  return r.value;
}

}  // namespace

double PairSurvival::operator()(double t, const QuadratureConfig& q) const {
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "pair survival needs t >= 0, got " + std::to_string(t));
  if (t == 0.0) return 1.0;
  const double g = bx_.scale();
  const double h = by_.scale();
  const std::vector<double> splits = split_points(t);

  const double none_failed = x_.survival(g * t) * y_.survival(h * t);
  const double y_first = switch_integral(x_, bx_, y_, by_, t, splits, q, "X-survives integral");
  const double x_first = switch_integral(y_, by_, x_, bx_, t, splits, q, "Y-survives integral");
  return std::clamp(none_failed + y_first + x_first, 0.0, 1.0);
}

double pair_survival(const LoadSharePair& pair, double t, const QuadratureConfig& q) {
  return PairSurvival(pair)(t, q);
}

std::vector<double> pair_survival_curve(const LoadSharePair& pair, std::span<const double> grid,
                                        const QuadratureConfig& q) {
  const PairSurvival ps(pair);
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = ps(grid[i], q);
  return out;
}

namespace {

double others_product(const SystemSpec& s, double t, bool survival) {
  double p = 1.0;
  for (std::size_t j = 0; j < s.components.size(); ++j) {
    if (j + 1 == s.allocation) continue;
    p *= survival ? s.components[j].lifetime.survival(t) : s.components[j].lifetime.cdf(t);
  }
  return p;
}

double reliability_with(const SystemSpec& s, const PairSurvival& ps, double t, const QuadratureConfig& q) {
  if (s.structure == Structure::Series) return ps(t, q) * others_product(s, t, true);
  return 1.0 - (1.0 - ps(t, q)) * others_product(s, t, false);
}

}  // namespace

double series_survival(const SystemSpec& s, double t, const QuadratureConfig& q) {
  if (s.structure != Structure::Series) throw Error(ErrorKind::Domain, "series_survival needs a series system");
  return pair_survival(s.pair(), t, q) * others_product(s, t, true);
}

double parallel_cdf(const SystemSpec& s, double t, const QuadratureConfig& q) {
  if (s.structure != Structure::Parallel) throw Error(ErrorKind::Domain, "parallel_cdf needs a parallel system");
  return (1.0 - pair_survival(s.pair(), t, q)) * others_product(s, t, false);
}

double system_reliability(const SystemSpec& s, double t, const QuadratureConfig& q) {
  return reliability_with(s, PairSurvival(s.pair()), t, q);
}

std::vector<double> reliability_curve(const SystemSpec& s, std::span<const double> grid, const QuadratureConfig& q) {
  const PairSurvival ps(s.pair());
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = reliability_with(s, ps, grid[i], q);
  return out;
}

AllocationReport allocation_table(const std::vector<Component>& components, const Component& spare, double alpha,
                                  Structure structure, std::span<const double> grid, const QuadratureConfig& q,
                                  double tolerance) {
  if (components.size() < 2) throw Error(ErrorKind::Domain, "allocation table needs at least 2 components", "E_COMPONENTS");
  AllocationReport rep{structure, std::vector<double>(grid.begin(), grid.end()), {}, {}, std::nullopt, tolerance};
  std::vector<SystemSpec> specs;
  for (std::size_t i = 1; i <= components.size(); ++i) {
    specs.push_back(SystemSpec{components, spare, alpha, structure, i});
    rep.curves.push_back(reliability_curve(specs.back(), grid, q));
  }

  const std::size_t n = components.size();
  std::vector<bool> beats_all(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairwiseComparison c{i + 1, j + 1, Dominance::Tie, std::nullopt, std::nullopt, std::nullopt};
      double most_neg = 0.0, most_pos = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double d = rep.curves[i][k] - rep.curves[j][k];
        if (d < -tolerance && d < most_neg) {
          most_neg = d;
          c.first_below = GapPoint{grid[k], rep.curves[i][k], rep.curves[j][k]};
        }
        if (d > tolerance && d > most_pos) {
          most_pos = d;
          c.second_below = GapPoint{grid[k], rep.curves[i][k], rep.curves[j][k]};
        }
      }
      if (c.first_below && c.second_below) {
        c.relation = Dominance::Crossing;
        double lo = std::min(c.first_below->t, c.second_below->t);
        double hi = std::max(c.first_below->t, c.second_below->t);
        const PairSurvival pi(specs[i].pair()), pj(specs[j].pair());
        const auto diff = [&](double t) {
          return reliability_with(specs[i], pi, t, q) - reliability_with(specs[j], pj, t, q);
        };
        const bool lo_negative = diff(lo) < 0.0;
        for (int it = 0; it < 60 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
          const double mid = 0.5 * (lo + hi);
          if ((diff(mid) < 0.0) == lo_negative)
            lo = mid;
          else
            hi = mid;
        }
        c.sign_change = 0.5 * (lo + hi);
      } else if (c.first_below) {
        c.relation = Dominance::SecondDominates;
      } else if (c.second_below) {
        c.relation = Dominance::FirstDominates;
      }
      if (c.first_below) beats_all[i] = false;
      if (c.second_below) beats_all[j] = false;
      rep.comparisons.push_back(c);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (beats_all[i]) {
      rep.best = i + 1;
      break;
    }
  return rep;
}

const char* to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::Tie: return "tie";
    case Dominance::FirstDominates: return "first_dominates";
    case Dominance::SecondDominates: return "second_dominates";
    case Dominance::Crossing: return "crossing";
  }
  return "?";
}

const char* to_string(Structure s) noexcept { return s == Structure::Series ? "series" : "parallel"; }

}  // namespace lshare
