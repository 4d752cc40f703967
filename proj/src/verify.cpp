#include "lshare/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lshare/error.hpp"

namespace lshare {

namespace {

std::string xi(std::size_t i) { return "X" + std::to_string(i); }

ConditionVerdict order_condition(std::size_t i, std::size_t j, const Instance& in, Relation rel, Direction dir) {
  const LifetimeDistribution& a = in.components[i - 1].lifetime;
  const LifetimeDistribution& b = in.components[j - 1].lifetime;
  const std::vector<double> grid = order_grid(a, b);
  const OrderVerdict v = check_order(a, b, rel, dir, grid);
  const std::string op = std::string(dir == Direction::LessEq ? "<=" : ">=") + to_string(rel);
  return ConditionVerdict{xi(i) + " " + op + " " + xi(j), v.holds, v.witness};
}

// Log-concave: slopes of log survival nonincreasing. The witness reports the
// later slope (lhs) exceeding the earlier one (rhs) for concavity, and the
// reverse for convexity.
ConditionVerdict shape_condition(const std::string& who, const LifetimeDistribution& d, bool concave) {
  const std::vector<double> grid = interior_grid(d);
  const LogShapeVerdict v = classify_log_survival(d, grid);
  const auto& bad = concave ? v.concavity_violation : v.convexity_violation;
  ConditionVerdict c{who + (concave ? " has log-concave survival" : " has log-convex survival"), !bad.has_value(),
                     std::nullopt};
  if (bad) {
    const auto [t0, t1, t2] = *bad;
    const double s01 = (d.log_survival(t1) - d.log_survival(t0)) / (t1 - t0);
    const double s12 = (d.log_survival(t2) - d.log_survival(t1)) / (t2 - t1);
    c.witness = concave ? Witness{t1, s12, s01, t0} : Witness{t1, s01, s12, t0};
  }
  return c;
}

ConditionVerdict scale_le(const std::string& name, double lhs, double rhs) {
  const double pt[] = {0.0};
  return check_pointwise_le(name, [=](double) { return lhs; }, [=](double) { return rhs; }, pt);
}

struct Context {
  const Instance& in;
  std::vector<double> ugrid;
  HypothesisCheck out;

  void add(std::string group, HypothesisRole role, ConditionVerdict v) {
    out.items.push_back(Hypothesis{std::move(group), role, std::move(v)});
  }
  void req(std::string group, ConditionVerdict v) { add(std::move(group), HypothesisRole::Required, std::move(v)); }

  const Component& comp(std::size_t i) const { return in.components[i - 1]; }
  BoundModel bound(std::size_t i) const { return comp(i).model.bind(in.alpha); }

  // w_i(u) = g_i(alpha) u for each listed component, g and w ordered along the
  // list, gamma(u) = h(1 - alpha) u.
  void cem_ordering(const std::string& group, std::size_t n, HypothesisRole role, bool with_spare) {
    for (std::size_t i = 1; i <= n; ++i)
      add(group, role,
          check_scaled_time_age("w" + std::to_string(i) + "(u) = g" + std::to_string(i) + "(alpha) u",
                                comp(i).model, in.alpha, ugrid));
    for (std::size_t i = 1; i < n; ++i) {
      const std::string a = std::to_string(i), b = std::to_string(i + 1);
      add(group, role, scale_le("g" + a + "(alpha) <= g" + b + "(alpha)", bound(i).scale(), bound(i + 1).scale()));
    }
    if (with_spare)
      add(group, role, check_scaled_time_age("gamma(u) = h(1-alpha) u", in.spare.model, 1.0 - in.alpha, ugrid));
  }

  void spare_conditions(const std::string& group, HypothesisRole role, bool log_concave) {
    if (log_concave) add(group, role, shape_condition("Y", in.spare.lifetime, true));
    for (auto& v : check_spare_conditions(in.spare.model.virtual_age, in.spare.model.load_scale, in.alpha, ugrid).list())
      add(group, role, std::move(v));
  }

  ConditionVerdict age_le(std::size_t i, std::size_t j) const {
    const BoundModel bi = bound(i), bj = bound(j);
    return check_pointwise_le("w" + std::to_string(i) + "(u) <= w" + std::to_string(j) + "(u)",
                              [&](double u) { return bi.age(u); }, [&](double u) { return bj.age(u); }, ugrid);
  }
  // g_k(alpha) u <= w_i(u)
  ConditionVerdict scaled_le_age(std::size_t k, std::size_t i) const {
    const BoundModel bk = bound(k), bi = bound(i);
    return check_pointwise_le("g" + std::to_string(k) + "(alpha) u <= w" + std::to_string(i) + "(u)",
                              [&](double u) { return bk.scale() * u; }, [&](double u) { return bi.age(u); }, ugrid);
  }
  ConditionVerdict same_model(std::size_t i, std::size_t j) const {
    const BoundModel bi = bound(i), bj = bound(j);
    return check_pointwise_le(
        xi(i) + " and " + xi(j) + " share model functions",
        [&](double u) { return std::abs(bi.age(u) - bj.age(u)) + std::abs(bi.scale() - bj.scale()); },
        [](double) { return 0.0; }, ugrid);
  }

  void alternative(std::string label, std::vector<ConditionVerdict> items) {
    for (auto& v : items) add(label, HypothesisRole::Alternative, std::move(v));
  }

  void t3_1_group(HypothesisRole role) {
    const std::string g = role == HypothesisRole::Informational ? "general form " : "";
    add(g + "(i)", role, scale_le("g1(alpha) <= g2(alpha)", bound(1).scale(), bound(2).scale()));
    add(g + "(i)", role, age_le(1, 2));
    spare_conditions(g + "(ii)", role, false);
    add(g + "(iii)", role, order_condition(1, 2, in, Relation::Hr, Direction::GreaterEq));
    add(g + "(iv)", role, shape_condition("Y", in.spare.lifetime, true));
  }

  void finish() {
    bool required = true;
    std::vector<std::string> labels;
    for (const auto& h : out.items) {
      if (h.role == HypothesisRole::Required && !h.verdict.holds) required = false;
      if (h.role == HypothesisRole::Alternative && std::find(labels.begin(), labels.end(), h.group) == labels.end())
        labels.push_back(h.group);
    }
    for (const auto& l : labels) {
      const bool ok = std::all_of(out.items.begin(), out.items.end(), [&](const Hypothesis& h) {
        return h.role != HypothesisRole::Alternative || h.group != l || h.verdict.holds;
      });
      if (ok) {
        out.satisfied_alternative = l;
        break;
      }
    }
    out.holds = required && (labels.empty() || out.satisfied_alternative.has_value());
  }
};

bool is_chain(TheoremId id) {
  return id == TheoremId::C2_1 || id == TheoremId::C2_2 || id == TheoremId::Cor3_2 || id == TheoremId::Cor3_3 ||
         id == TheoremId::Cor3_4;
}

bool is_pair_theorem(TheoremId id) { return id == TheoremId::T2_1 || id == TheoremId::T3_1; }

Structure structure_of(TheoremId id) {
  switch (id) {
    case TheoremId::T2_3:
    case TheoremId::C2_2:
    case TheoremId::T3_4_parallel:
    case TheoremId::Cor3_4: return Structure::Parallel;
    default: return Structure::Series;
  }
}

std::vector<double> model_grid(const Instance& in, const VerifyOptions& o) {
  const double hi = o.horizon ? *o.horizon : conclusion_horizon(in, o.horizon_quantile);
  return make_grid(0.0, hi, o.condition_points, Spacing::Linear);
}

}  // namespace

double conclusion_horizon(const Instance& in, double q) {
  double hi = in.spare.lifetime.quantile(q);
  for (const auto& c : in.components) hi = std::max(hi, c.lifetime.quantile(q));
  return hi;
}

HypothesisCheck check_hypotheses(TheoremId id, const Instance& in, const VerifyOptions& options) {
  check_share(in.alpha);
  const std::size_t n = in.components.size();
  if (n < 2)
    throw Error(ErrorKind::Specification, std::string(to_string(id)) + " compares at least two components",
                "E_COMPONENTS");
  Context c{in, model_grid(in, options), {}};
  const std::size_t chain = is_chain(id) ? n : 2;

  switch (id) {
    case TheoremId::T2_1:
      c.req("(i)", order_condition(1, 2, in, Relation::St, Direction::GreaterEq));
      c.cem_ordering("(ii)", 2, HypothesisRole::Required, true);
      c.t3_1_group(HypothesisRole::Informational);
      break;
    case TheoremId::T2_2:
    case TheoremId::C2_1:
      for (std::size_t i = 1; i < chain; ++i) c.req("(i)", order_condition(i, i + 1, in, Relation::Hr, Direction::LessEq));
      c.cem_ordering("(ii)", chain, HypothesisRole::Required, true);
      break;
    case TheoremId::T2_3:
    case TheoremId::C2_2:
      for (std::size_t i = 1; i < chain; ++i)
        c.req("(i)", order_condition(i, i + 1, in, Relation::Rhr, Direction::GreaterEq));
      c.cem_ordering("(ii)", chain, HypothesisRole::Required, true);
      break;
    case TheoremId::T3_1:
      c.t3_1_group(HypothesisRole::Required);
      c.alternative("(iii) X1 log-concave", {shape_condition("X1", c.comp(1).lifetime, true)});
      c.alternative("(iii) X2 log-concave", {shape_condition("X2", c.comp(2).lifetime, true)});
      break;
    case TheoremId::T3_2:
      c.req("(i)", order_condition(1, 2, in, Relation::Hr, Direction::LessEq));
      c.req("(i)", scale_le("g1(alpha) <= g2(alpha)", c.bound(1).scale(), c.bound(2).scale()));
      c.spare_conditions("(ii)", HypothesisRole::Required, true);
      c.alternative("(iii)", {shape_condition("X1", c.comp(1).lifetime, true), c.scaled_le_age(1, 2), c.age_le(1, 2)});
      c.alternative("(iv)",
                    {shape_condition("X1", c.comp(1).lifetime, false), c.scaled_le_age(1, 2), c.age_le(2, 1)});
      c.alternative("(v)", {shape_condition("X2", c.comp(2).lifetime, true), c.scaled_le_age(1, 1), c.age_le(1, 2)});
      c.alternative("(vi)",
                    {shape_condition("X2", c.comp(2).lifetime, false), c.scaled_le_age(1, 1), c.age_le(2, 1)});
      break;
    case TheoremId::Cor3_2: {
      for (std::size_t i = 1; i < n; ++i) {
        c.req("(i)", order_condition(i, i + 1, in, Relation::Hr, Direction::LessEq));
        c.req("(i)", scale_le("g" + std::to_string(i) + "(alpha) <= g" + std::to_string(i + 1) + "(alpha)",
                              c.bound(i).scale(), c.bound(i + 1).scale()));
      }
      c.spare_conditions("(ii)", HypothesisRole::Required, true);
      const std::string label = n % 2 == 0 ? "(iii)" : "(iv)";
      for (std::size_t first : {std::size_t{1}, std::size_t{2}}) {
        for (bool concave : {true, false}) {
          std::vector<ConditionVerdict> items;
          for (std::size_t i = first; i <= n; i += 2) items.push_back(shape_condition(xi(i), c.comp(i).lifetime, concave));
          if (concave) {
            items.push_back(c.scaled_le_age(n, 1));
            for (std::size_t i = 1; i < n; ++i) items.push_back(c.age_le(i, i + 1));
          } else {
            items.push_back(c.scaled_le_age(n, n));
            for (std::size_t i = n; i > 1; --i) items.push_back(c.age_le(i, i - 1));
          }
          c.alternative(label + (first == 1 ? " odd-indexed " : " even-indexed ") +
                            (concave ? "log-concave" : "log-convex"),
                        std::move(items));
        }
      }
      break;
    }
    case TheoremId::T3_3_same_model:
    case TheoremId::Cor3_3:
      for (std::size_t i = 1; i < chain; ++i) c.req("same model", c.same_model(i, i + 1));
      c.req("age", c.scaled_le_age(1, 1));
      for (std::size_t i = 1; i < chain; ++i) c.req("order", order_condition(i, i + 1, in, Relation::Hr, Direction::LessEq));
      break;
    case TheoremId::T3_4_parallel:
    case TheoremId::Cor3_4:
      for (std::size_t i = 1; i < chain; ++i)
        c.req("order", order_condition(i, i + 1, in, Relation::Rhr, Direction::GreaterEq));
      c.cem_ordering("(i)", chain, HypothesisRole::Required, false);
      c.spare_conditions("(ii)", HypothesisRole::Required, true);
      break;
  }
  c.finish();
  return std::move(c.out);
}

namespace {

std::vector<std::vector<double>> conclusion_curves(TheoremId id, const Instance& in, std::span<const double> grid,
                                                   std::size_t count, const QuadratureConfig& q) {
  std::vector<std::vector<double>> curves;
  for (std::size_t i = 1; i <= count; ++i) {
    if (is_pair_theorem(id))
      curves.push_back(pair_survival_curve(in.pair(i), grid, q));
    else
      curves.push_back(reliability_curve(in.system(structure_of(id), i), grid, q));
  }
  return curves;
}

std::string conclusion_name(TheoremId id, std::size_t i, std::size_t j) {
  const std::string a = std::to_string(i), b = std::to_string(j);
  if (is_pair_theorem(id)) return "X" + a + "+Y >=st X" + b + "+Y";
  const char* s = structure_of(id) == Structure::Series ? "U" : "V";
  return s + a + " >=st " + s + b;
}

ConclusionVerdict compare_curves(std::string name, std::size_t i, std::size_t j, std::span<const double> grid,
                                 const std::vector<double>& a, const std::vector<double>& b, double slack) {
  ConclusionVerdict c{i, j, {std::move(name), true, std::nullopt}, 0.0, 0.0};
  std::size_t worst = 0;
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (a[k] - b[k] < a[worst] - b[worst]) worst = k;
  c.min_gap = a[worst] - b[worst];
  c.min_gap_at = grid[worst];
  if (c.min_gap < -slack) {
    c.verdict.holds = false;
    c.verdict.witness = Witness{grid[worst], a[worst], b[worst], std::nullopt};
  }
  return c;
}

std::vector<SimulationAgreement> simulate(TheoremId id, const Instance& in, std::span<const double> grid,
                                          const std::vector<std::vector<double>>& curves, const VerifyOptions& o) {
  std::vector<SimulationAgreement> out;
  // simulation_points grid indices spread evenly, both ends included.
  const std::size_t m = std::min(grid.size(), std::max<std::size_t>(2, o.simulation_points));
  std::vector<double> sub;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m; ++k) {
    idx.push_back((k * (grid.size() - 1) + (m - 1) / 2) / (m - 1));
    sub.push_back(grid[idx.back()]);
  }
  for (std::size_t i = 1; i <= curves.size(); ++i) {
    const SurvivalEstimate e = is_pair_theorem(id) ? estimate_survival(in.pair(i), sub, *o.simulation)
                                                   : estimate_survival(in.system(structure_of(id), i), sub, *o.simulation);
    SimulationAgreement a{i, sub.size(), 0.0, 0.0};
    std::size_t ok = 0;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      // Standard error under the analytic value.
      const double q = std::clamp(curves[i - 1][idx[k]], 0.0, 1.0);
      const double diff = std::abs(q - e.estimate[k]);
      const double se = std::sqrt(q * (1.0 - q) / static_cast<double>(e.samples));
      if (diff <= 3.0 * se) ++ok;
      const double z = se > 0.0 ? diff / se : (diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
      a.max_abs_z = std::max(a.max_abs_z, z);
    }
    a.within_3se = sub.empty() ? 1.0 : static_cast<double>(ok) / static_cast<double>(sub.size());
    out.push_back(a);
  }
  return out;
}

std::vector<std::string> describe(const Instance& in) {
  std::vector<std::string> d;
  for (std::size_t i = 0; i < in.components.size(); ++i) d.push_back(xi(i + 1) + ": " + in.components[i].lifetime.describe());
  d.push_back("Y: " + in.spare.lifetime.describe());
  d.push_back("alpha: " + std::to_string(in.alpha));
  return d;
}

TheoremReport base_report(std::string id, TheoremId theorem, const Instance& in, const VerifyOptions& o,
                          double horizon) {
  TheoremReport r;
  r.id = std::move(id);
  r.instance = in.name;
  r.description = describe(in);
  r.structure = structure_of(theorem);
  r.pair_only = is_pair_theorem(theorem);
  r.hypotheses_hold = false;
  r.conclusion_holds = true;
  r.grid_start = 0.0;
  r.grid_stop = horizon;
  r.grid_points = o.grid_points;
  r.slack = o.slack;
  r.quadrature = o.quadrature;
  return r;
}

}  // namespace

TheoremReport verify_theorem_instance(TheoremId id, const Instance& in, const VerifyOptions& o) {
  o.quadrature.validate();
  if (o.grid_points < 3) throw Error(ErrorKind::Config, "conclusion grid needs at least 3 points", "E_GRID");
  const HypothesisCheck h = check_hypotheses(id, in, o);
  const double horizon = o.horizon ? *o.horizon : conclusion_horizon(in, o.horizon_quantile);
  TheoremReport r = base_report(to_string(id), id, in, o, horizon);
  r.hypotheses = h.items;
  r.hypotheses_hold = h.holds;
  r.satisfied_alternative = h.satisfied_alternative;

  const std::vector<double> grid = make_grid(0.0, horizon, o.grid_points, Spacing::Linear);
  const std::size_t count = is_chain(id) ? in.components.size() : 2;
  const auto curves = conclusion_curves(id, in, grid, count, o.quadrature);
  for (std::size_t i = 1; i < count; ++i) {
    r.conclusions.push_back(
        compare_curves(conclusion_name(id, i, i + 1), i, i + 1, grid, curves[i - 1], curves[i], o.slack));
    r.conclusion_holds = r.conclusion_holds && r.conclusions.back().verdict.holds;
  }
  if (o.simulation) r.simulation = simulate(id, in, grid, curves, o);
  return r;
}

namespace {

struct CeSetup {
  TheoremId theorem;
  DifferenceId difference;
  double lo;
  double hi;
  Relation stronger;
  Direction direction;
};

CeSetup ce_setup(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::CE2_1: return {TheoremId::T2_1, DifferenceId::E0, 0.0, 10.0, Relation::St, Direction::GreaterEq};
    case CounterexampleId::CE2_2: return {TheoremId::T2_2, DifferenceId::E1, 0.0, 1.0, Relation::Hr, Direction::LessEq};
    case CounterexampleId::CE2_4: return {TheoremId::T2_3, DifferenceId::E2, 1.0, 3.0, Relation::Rhr, Direction::GreaterEq};
  }
  throw Error(ErrorKind::Domain, "unknown counterexample");
}

Instance ce_instance(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::CE2_1: return builtin::counterexample_2_1();
    case CounterexampleId::CE2_2: return builtin::counterexample_2_2();
    case CounterexampleId::CE2_4: return builtin::counterexample_2_4();
  }
  throw Error(ErrorKind::Domain, "unknown counterexample");
}

}  // namespace

TheoremReport reproduce_counterexample(CounterexampleId id, const VerifyOptions& o) {
  return reproduce_counterexample(id, ce_instance(id), o);
}

TheoremReport reproduce_counterexample(CounterexampleId id, const Instance& in, const VerifyOptions& o) {
  const CeSetup s = ce_setup(id);
  const HypothesisCheck h = check_hypotheses(s.theorem, in, o);
  TheoremReport r = base_report(to_string(id), s.theorem, in, o, s.hi);
  r.grid_start = s.lo;
  r.hypotheses = h.items;
  r.hypotheses_hold = h.holds;

  // The stated pattern: the components are st-ordered in the theorem's
  // direction; CE2_1 breaks the age ordering, the others break the stronger order.
  const ConditionVerdict st = order_condition(1, 2, in, Relation::St, s.direction);
  r.hypotheses.insert(r.hypotheses.begin(), Hypothesis{"pattern", HypothesisRole::Informational, st});
  bool required_failed = false, model_ok = true, stronger_failed = false;
  for (const auto& x : h.items) {
    if (x.role != HypothesisRole::Required) continue;
    if (!x.verdict.holds) required_failed = true;
    if (x.group == "(ii)" && !x.verdict.holds) model_ok = false;
    if (x.group == "(i)" && !x.verdict.holds) stronger_failed = true;
  }
  r.pattern_matches = st.holds && required_failed &&
                      (id == CounterexampleId::CE2_1 ? !model_ok : (stronger_failed && model_ok));

  const auto f = [&](double t) { return counterexample_difference(s.difference, in, t, o.quadrature); };
  std::optional<NegativeWitness> w;
  std::size_t res = 64;
  for (; res <= 4096; res *= 4) {
    w = find_negative_witness(f, s.lo, s.hi, res + 1);
    if (w) break;
  }
  if (!w) {
    const std::vector<double> grid = make_grid(s.lo, s.hi, 4097, Spacing::Linear);
    double best = f(grid[0]), at = grid[0];
    for (double t : grid)
      if (const double v = f(t); v < best) best = v, at = t;
    throw Error(ErrorKind::Reproduction,
                std::string(to_string(id)) + ": no negative value of " + to_string(s.difference) + " on [" +
                    std::to_string(s.lo) + ", " + std::to_string(s.hi) + "] at resolution 4097; minimum " +
                    std::to_string(best) + " at t=" + std::to_string(at),
                "E_NOT_REPRODUCED");
  }
  r.witness = CounterexampleWitness{s.difference, s.lo, s.hi, res + 1, w->t, w->value};
  r.conclusion_holds = false;

  // Conclusion restated as a system comparison at the witness.
  const std::vector<double> at = {w->t};
  const auto curves = conclusion_curves(s.theorem, in, at, 2, o.quadrature);
  r.conclusions.push_back(
      compare_curves(conclusion_name(s.theorem, 1, 2), 1, 2, at, curves[0], curves[1], 0.0));
  return r;
}

Instance random_cem_instance(TheoremId id, std::uint64_t seed) {
  if (id != TheoremId::T2_1 && id != TheoremId::T2_2 && id != TheoremId::T2_3)
    throw Error(ErrorKind::Domain, "random instances are generated for T2_1, T2_2 and T2_3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rate(0.2, 5.0), share(0.1, 0.9), power(0.5, 3.0), shape(1.0, 3.0),
      coin(0.0, 1.0);
  const double alpha = share(rng);
  double r1 = rate(rng), r2 = rate(rng);
  // T2_2 wants X1 <=hr X2 (larger rate first); T2_1 and T2_3 want X1 stronger.
  if ((id == TheoremId::T2_2) != (r1 >= r2)) std::swap(r1, r2);
  double p1 = power(rng), p2 = power(rng);
  if (p1 < p2) std::swap(p1, p2);  // alpha^p1 <= alpha^p2
  const bool weibull = coin(rng) < 0.5;
  const double k = shape(rng);
  const auto make = [&](double r) {
    return weibull ? LifetimeDistribution::weibull(k, 1.0 / r) : LifetimeDistribution::exponential(r);
  };
  Instance in{"random_" + std::string(to_string(id)) + "_" + std::to_string(seed),
              {{make(r1), cem_pair(LoadScale::power(p1), alpha)}, {make(r2), cem_pair(LoadScale::power(p2), alpha)}},
              {coin(rng) < 0.5 ? LifetimeDistribution::exponential(rate(rng))
                               : LifetimeDistribution::weibull(shape(rng), 1.0 / rate(rng)),
               cem_pair(coin(rng) < 0.5 ? LoadScale::identity() : LoadScale::power(power(rng)), alpha)},
              alpha};
  if (id != TheoremId::T2_1 && coin(rng) < 0.5)
    in.components.push_back({LifetimeDistribution::exponential(rate(rng)), cem_pair(LoadScale::identity(), alpha)});
  return in;
}

const char* to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::T2_1: return "T2_1";
    case TheoremId::T2_2: return "T2_2";
    case TheoremId::T2_3: return "T2_3";
    case TheoremId::C2_1: return "C2_1";
    case TheoremId::C2_2: return "C2_2";
    case TheoremId::T3_1: return "T3_1";
    case TheoremId::T3_2: return "T3_2";
    case TheoremId::T3_3_same_model: return "T3_3_same_model";
    case TheoremId::T3_4_parallel: return "T3_4_parallel";
    case TheoremId::Cor3_2: return "Cor3_2";
    case TheoremId::Cor3_3: return "Cor3_3";
    case TheoremId::Cor3_4: return "Cor3_4";
  }
  return "?";
}

const char* to_string(CounterexampleId id) noexcept {
  switch (id) {
    case CounterexampleId::CE2_1: return "CE2_1";
    case CounterexampleId::CE2_2: return "CE2_2";
    case CounterexampleId::CE2_4: return "CE2_4";
  }
  return "?";
}

const char* to_string(HypothesisRole r) noexcept {
  switch (r) {
    case HypothesisRole::Required: return "required";
    case HypothesisRole::Alternative: return "alternative";
    case HypothesisRole::Informational: return "informational";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(TheoremId::Cor3_4); ++i)
    if (s == to_string(static_cast<TheoremId>(i))) return static_cast<TheoremId>(i);
  return std::nullopt;
}

std::optional<CounterexampleId> parse_counterexample(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(CounterexampleId::CE2_4); ++i)
    if (s == to_string(static_cast<CounterexampleId>(i))) return static_cast<CounterexampleId>(i);
  return std::nullopt;
}

}  // namespace lshare
