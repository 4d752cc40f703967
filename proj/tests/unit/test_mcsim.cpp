#include <cmath>

#include <gtest/gtest.h>

#include "lshare/error.hpp"
#include "lshare/instances.hpp"
#include "lshare/mcsim.hpp"
#include "lshare/order.hpp"

using namespace lshare;

namespace {

LoadSharePair exp_pair_cem() {
  return {LifetimeDistribution::exponential(1), LifetimeDistribution::exponential(2), 0.5,
          cem_pair(LoadScale::identity(), 0.5), cem_pair(LoadScale::identity(), 0.5)};
}

SimConfig config(std::uint64_t samples, std::uint64_t seed = 1, unsigned threads = 1) {
  SimConfig c;
  c.samples = samples;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

TEST(RandomStream, CounterBased) {
  RandomStream a(5, 17), b(5, 17), c(5, 18), d(6, 17);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_NE(x, d.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Simulation, BitIdenticalAcrossRunsAndThreads) {
  const auto grid = make_grid(0.0, 4.0, 41, Spacing::Linear);
  const SystemSpec s = builtin::counterexample_2_2().system(Structure::Series, 2);
  const auto a = estimate_survival(s, grid, config(20000, 42, 1));
  const auto b = estimate_survival(s, grid, config(20000, 42, 1));
  const auto c = estimate_survival(s, grid, config(20000, 42, 3));
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.estimate, c.estimate);
  EXPECT_EQ(a.standard_error, c.standard_error);
  const auto d = estimate_survival(s, grid, config(20000, 43, 1));
  EXPECT_NE(a.estimate, d.estimate);
}

TEST(Simulation, CumulativeExposureClosedForm) {
  const std::vector<double> grid{1.0};
  const auto e = estimate_survival(exp_pair_cem(), grid, config(1'000'000, 9));
  EXPECT_NEAR(e.estimate[0], 0.600424, 3 * e.standard_error[0]);
}

TEST(Simulation, HotStandbyIsMaximum) {
  const LoadSharePair p{LifetimeDistribution::weibull(2, 1), builtin::uniform_0_3(), 0.5,
                        {VirtualAge::linear(1.0), LoadScale::constant(1.0)},
                        {VirtualAge::linear(1.0), LoadScale::constant(1.0)}};
  const auto grid = make_grid(0.1, 2.9, 15, Spacing::Linear);
  const auto e = estimate_survival(p, grid, config(400000, 3));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double sx = p.x.survival(grid[k]), sy = p.y.survival(grid[k]);
    EXPECT_NEAR(e.estimate[k], sx + sy - sx * sy, 4 * e.standard_error[k] + 1e-12) << grid[k];
  }
}

TEST(Simulation, NearlyImmortalPartnerNeverFailsFirst) {
  LoadSharePair p = exp_pair_cem();
  p.y = LifetimeDistribution::exponential(1e-9);
  const PairSampler sampler(p);
  for (std::uint64_t r = 0; r < 200; ++r) {
    RandomStream a(77, r), b(77, r);
    const double x = p.x.quantile(b.uniform());
    const PairSample s = sampler(a);
    EXPECT_EQ(s.switch_time, x / 0.5);
    EXPECT_EQ(s.survivor, Survivor::Y);
    EXPECT_GE(s.lifetime, s.switch_time);
  }
}

TEST(Simulation, ZeroScaleNeverSwitches) {
  const LoadSharePair p{LifetimeDistribution::exponential(1), LifetimeDistribution::exponential(1), 0.5,
                        {VirtualAge::cem(), LoadScale::constant(0.0)}, {VirtualAge::cem(), LoadScale::constant(0.0)}};
  RandomStream rng(1, 1);
  const PairSample s = sample_pair_lifetime(p, rng);
  EXPECT_EQ(s.survivor, Survivor::None);
  EXPECT_TRUE(std::isinf(s.lifetime));
}

TEST(Simulation, SeriesClosedForm) {
  Instance in{"n2", {{LifetimeDistribution::exponential(1), cem_pair(LoadScale::identity(), 0.5)},
                     {LifetimeDistribution::exponential(1.2), cem_pair(LoadScale::identity(), 0.5)}},
              {LifetimeDistribution::exponential(2), cem_pair(LoadScale::identity(), 0.5)}, 0.5};
  const std::vector<double> grid{1.0};
  const auto e = estimate_survival(in.system(Structure::Series, 1), grid, config(1'000'000, 5));
  EXPECT_NEAR(e.estimate[0], 0.180844, 3 * e.standard_error[0]);
}

TEST(Simulation, CounterexampleSignAgreesWithQuadrature) {
  const Instance in = builtin::counterexample_2_1();
  const double t = 1.1;
  const double e0 = counterexample_difference(DifferenceId::E0, in, t);
  const std::vector<double> grid{t};
  const auto a = estimate_survival(in.pair(1), grid, config(1'000'000, 11));
  const auto b = estimate_survival(in.pair(2), grid, config(1'000'000, 12));
  const double diff = a.estimate[0] - b.estimate[0];
  const double se = std::hypot(a.standard_error[0], b.standard_error[0]);
  ASSERT_GT(std::abs(e0), 5 * se);
  EXPECT_LT(diff, 0.0);
  EXPECT_LT(e0, 0.0);
}

TEST(Simulation, EstimatesAreMonotoneWithBinomialErrors) {
  const auto grid = make_grid(0.0, 5.0, 51, Spacing::Linear);
  const auto e = estimate_survival(builtin::example_2_3().system(Structure::Parallel, 1), grid, config(50000, 2));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k) EXPECT_LE(e.estimate[k], e.estimate[k - 1]);
    const double p = e.estimate[k];
    EXPECT_DOUBLE_EQ(e.standard_error[k], std::sqrt(p * (1 - p) / 50000.0));
  }
}

TEST(Simulation, SingularityPropagates) {
  const LoadSharePair p{builtin::uniform_0_3(), LifetimeDistribution::exponential(1), 0.5,
                        {VirtualAge::linear(1.0), LoadScale::constant(0.5)}, cem_pair(LoadScale::identity(), 0.5)};
  const std::vector<double> grid{1.0};
  try {
    estimate_survival(p, grid, config(100000, 1, 2));
    FAIL() << "expected a singularity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singularity);
  }
}

TEST(Simulation, RejectsZeroSamples) {
  const std::vector<double> grid{1.0};
  EXPECT_THROW(estimate_survival(exp_pair_cem(), grid, config(0)), Error);
}
