#include "lshare/instances.hpp"

namespace lshare::builtin {

namespace {

ModelFunctionPair constant_cem(double c) { return ModelFunctionPair{VirtualAge::cem(), LoadScale::constant(c)}; }

}  // namespace

LifetimeDistribution uniform_0_3() { return LifetimeDistribution::piecewise({{0.0, 3.0, {0.0, 1.0 / 3.0}}}); }

LifetimeDistribution quadratic_kink_0_3() {
  return LifetimeDistribution::piecewise({{0.0, 1.0, {0.0, 0.0, 1.0 / 3.0}}, {1.0, 3.0, {0.25, 0.0, 1.0 / 12.0}}});
}

Instance example_2_1(double lambda1, double lambda2, double mu, double alpha) {
  return Instance{"example_2_1",
                  {{LifetimeDistribution::exponential(lambda1), cem_pair(LoadScale::power(2.0), alpha)},
                   {LifetimeDistribution::exponential(lambda2), cem_pair(LoadScale::identity(), alpha)}},
                  {LifetimeDistribution::exponential(mu), cem_pair(LoadScale::identity(), alpha)},
                  alpha};
}

Instance example_2_2(double lambda1, double lambda2, double mu, double alpha, const std::vector<double>& extra_rates) {
  Instance in = example_2_1(lambda1, lambda2, mu, alpha);
  in.name = "example_2_2";
  for (double r : extra_rates)
    in.components.push_back({LifetimeDistribution::exponential(r), cem_pair(LoadScale::identity(), alpha)});
  return in;
}

Instance example_2_3(double k1, double k2, double mu, double alpha) {
  return Instance{"example_2_3",
                  {{LifetimeDistribution::shifted_pareto(k1, k1), cem_pair(LoadScale::power(2.0), alpha)},
                   {LifetimeDistribution::shifted_pareto(k2, k2), cem_pair(LoadScale::identity(), alpha)}},
                  {LifetimeDistribution::exponential(mu), cem_pair(LoadScale::identity(), alpha)},
                  alpha};
}

Instance counterexample_2_1() {
  return Instance{"CE2_1",
                  {{LifetimeDistribution::exponential(1.0), constant_cem(0.5)},
                   {LifetimeDistribution::exponential(1.2), constant_cem(0.25)}},
                  {LifetimeDistribution::exponential(2.0), constant_cem(0.5)},
                  0.5};
}

Instance counterexample_2_2() {
  return Instance{"CE2_2",
                  {{uniform_0_3(), constant_cem(0.01)}, {quadratic_kink_0_3(), constant_cem(0.1)}},
                  {LifetimeDistribution::exponential(3.0), constant_cem(0.9)},
                  0.5};
}

Instance counterexample_2_4() {
  return Instance{"CE2_4",
                  {{quadratic_kink_0_3(), constant_cem(0.01)}, {uniform_0_3(), constant_cem(0.1)}},
                  {LifetimeDistribution::exponential(3.0), constant_cem(0.9)},
                  0.5};
}

}  // namespace lshare::builtin
