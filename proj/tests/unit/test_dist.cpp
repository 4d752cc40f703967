#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lshare/dist.hpp"
#include "lshare/error.hpp"
#include "lshare/instances.hpp"
#include "lshare/quadrature.hpp"

using namespace lshare;

namespace {

std::vector<LifetimeDistribution> corpus() {
  return {LifetimeDistribution::exponential(1.0),      LifetimeDistribution::exponential(3.0),
          LifetimeDistribution::weibull(2.0, 1.0),     LifetimeDistribution::weibull(0.7, 2.0),
          LifetimeDistribution::shifted_pareto(1, 1),  LifetimeDistribution::shifted_pareto(0.5, 0.5),
          builtin::uniform_0_3(),                      builtin::quadratic_kink_0_3()};
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::Config;
}

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.diagnostic();
  }
  return "none";
}

}  // namespace

TEST(Survival, WorkedExamples) {
  EXPECT_EQ(LifetimeDistribution::exponential(1.0).survival(0.0), 1.0);
  EXPECT_NEAR(builtin::quadratic_kink_0_3().cdf(1.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(builtin::quadratic_kink_0_3().survival(1.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(LifetimeDistribution::exponential(3.0).survival(1.0), 0.0497870683678639, 1e-15);
}

TEST(Survival, SupportEnds) {
  const auto u = builtin::uniform_0_3();
  EXPECT_EQ(u.survival(3.0), 0.0);
  EXPECT_EQ(u.survival(7.0), 0.0);
  const auto p = LifetimeDistribution::shifted_pareto(0.5, 1.0);
  EXPECT_EQ(p.lower(), 2.0);
  EXPECT_EQ(p.survival(1.0), 1.0);
  EXPECT_EQ(p.cdf(2.0), 0.0);
  EXPECT_NEAR(p.survival(8.0), std::pow(0.5 * 8.0 / 1.0, -2.0), 1e-15);
}

TEST(Survival, NegativeTimeIsDomainError) {
  EXPECT_EQ(kind_of([] { LifetimeDistribution::exponential(1).survival(-1e-3); }), ErrorKind::Domain);
}

TEST(Survival, EqualsOneMinusCdf) {
  for (const auto& d : corpus())
    for (double t : {0.0, 0.3, 1.0, 1.7, 2.5, 4.0}) EXPECT_NEAR(d.survival(t), 1.0 - d.cdf(t), 1e-15) << d.describe();
}

TEST(Density, WorkedExamples) {
  EXPECT_NEAR(LifetimeDistribution::exponential(2).density(0.5).value, 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(builtin::uniform_0_3().density(1.5).value, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(builtin::quadratic_kink_0_3().density(2.0).value, 1.0 / 3.0, 1e-15);
}

TEST(Density, BreakpointNeedsSide) {
  const auto d = builtin::quadratic_kink_0_3();
  EXPECT_EQ(code_of([&] { d.density(1.0); }), "E_BREAKPOINT");
  EXPECT_NEAR(d.density(1.0, Side::Left).value, 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(d.density(1.0, Side::Right).value, 2.0 / 12.0, 1e-14);
}

TEST(Density, OutsideSupportIsDegenerate) {
  const auto v = builtin::uniform_0_3().density(4.0);
  EXPECT_EQ(v.value, 0.0);
  EXPECT_TRUE(v.degenerate);
  EXPECT_TRUE(LifetimeDistribution::shifted_pareto(1, 1).density(0.5).degenerate);
}

TEST(Hazard, WorkedExamples) {
  const auto e = LifetimeDistribution::exponential(1.2);
  for (double t : {0.1, 1.0, 5.0}) EXPECT_NEAR(e.hazard(t), 1.2, 1e-12);
  EXPECT_NEAR(builtin::uniform_0_3().hazard(0.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(LifetimeDistribution::exponential(3).reversed_hazard(1.0), 0.157187, 1e-6);
}

TEST(Hazard, DivisionByZeroIsSupportError) {
  EXPECT_EQ(kind_of([] { builtin::uniform_0_3().hazard(3.0); }), ErrorKind::Support);
  EXPECT_EQ(kind_of([] { LifetimeDistribution::exponential(1).reversed_hazard(0.0); }), ErrorKind::Support);
}

TEST(Quantile, WorkedExamples) {
  EXPECT_NEAR(LifetimeDistribution::exponential(1).quantile(1.0 - std::exp(-1.0)), 1.0, 1e-14);
  EXPECT_NEAR(builtin::quadratic_kink_0_3().quantile(1.0 / 3.0), 1.0, 1e-12);
  for (const auto& d : corpus()) EXPECT_EQ(d.quantile(0.0), d.lower()) << d.describe();
}

TEST(Quantile, RejectsOutsideUnitInterval) {
  EXPECT_EQ(kind_of([] { LifetimeDistribution::exponential(1).quantile(1.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { LifetimeDistribution::exponential(1).quantile(-0.1); }), ErrorKind::Domain);
}

TEST(Quantile, PiecewiseInversionAccuracy) {
  const auto d = builtin::quadratic_kink_0_3();
  for (double p = 0.01; p < 1.0; p += 0.01) EXPECT_LE(std::abs(d.cdf(d.quantile(p)) - p), 1e-12) << p;
}

TEST(Quantile, ConditionalIsMemorylessForExponential) {
  const auto e = LifetimeDistribution::exponential(2.0);
  EXPECT_NEAR(e.conditional_quantile(5.0, 0.5) - 5.0, e.quantile(0.5), 1e-12);
  const auto u = builtin::uniform_0_3();
  EXPECT_NEAR(u.conditional_quantile(1.5, 0.5), 2.25, 1e-12);
  EXPECT_EQ(kind_of([&] { u.conditional_quantile(3.0, 0.5); }), ErrorKind::Singularity);
}

TEST(LogShape, WorkedExamples) {
  const auto classify = [](const LifetimeDistribution& d) { return classify_log_survival(d, interior_grid(d)).shape; };
  EXPECT_EQ(classify(LifetimeDistribution::exponential(2)), LogShape::Both);
  EXPECT_EQ(classify(LifetimeDistribution::weibull(2, 1)), LogShape::LogConcave);
  EXPECT_EQ(classify(LifetimeDistribution::shifted_pareto(1, 1)), LogShape::LogConvex);
  EXPECT_EQ(classify(LifetimeDistribution::weibull(0.5, 1)), LogShape::LogConvex);
  EXPECT_EQ(classify(builtin::uniform_0_3()), LogShape::LogConcave);
}

TEST(LogShape, NeitherCarriesWitnesses) {
  // log survival of the kinked CDF is concave on [0, 1) but its slope jumps up at 1.
  const auto d = builtin::quadratic_kink_0_3();
  const auto v = classify_log_survival(d, interior_grid(d));
  EXPECT_EQ(v.shape, LogShape::Neither);
  ASSERT_TRUE(v.concavity_violation.has_value());
  ASSERT_TRUE(v.convexity_violation.has_value());
}

TEST(LogShape, ZeroSurvivalOnGridIsSupportError) {
  const std::vector<double> grid{1.0, 2.0, 3.0};
  EXPECT_EQ(kind_of([&] { classify_log_survival(builtin::uniform_0_3(), grid); }), ErrorKind::Support);
}

TEST(Piecewise, ValidationCodes) {
  EXPECT_EQ(code_of([] { LifetimeDistribution::piecewise({}); }), "E_CDF_SEGMENTS");
  EXPECT_EQ(code_of([] { LifetimeDistribution::piecewise({{0, 1, {0, 0.5}}}); }), "E_CDF_RANGE");
  EXPECT_EQ(code_of([] { LifetimeDistribution::piecewise({{0, 1, {0, 0.5}}, {1, 2, {0.25, 0.375}}}); }),
            "E_CDF_DISCONTINUOUS");
  EXPECT_EQ(code_of([] { LifetimeDistribution::piecewise({{0, 1, {0, 0.5}}, {1.5, 2, {-0.5, 0.75}}}); }),
            "E_CDF_SEGMENTS");
  EXPECT_EQ(code_of([] { LifetimeDistribution::piecewise({{0, 2, {0, 1.5, -0.5}}, {2, 3, {1.0}}}); }),
            "E_CDF_NONMONOTONE");
  EXPECT_EQ(code_of([] { LifetimeDistribution::exponential(0.0); }), "E_DIST_PARAM");
}

TEST(Piecewise, Breakpoints) {
  const auto d = builtin::quadratic_kink_0_3();
  EXPECT_EQ(d.breakpoints(), (std::vector<double>{0.0, 1.0, 3.0}));
  EXPECT_TRUE(d.is_breakpoint(1.0));
  EXPECT_FALSE(d.is_breakpoint(1.5));
}

TEST(Properties, FiniteDifferenceMatchesDensity) {
  for (const auto& d : corpus()) {
    const double lo = d.lower(), hi = std::isfinite(d.upper()) ? d.upper() : d.quantile(0.99);
    for (int i = 1; i < 50; ++i) {
      const double t = lo + (hi - lo) * i / 50.0;
      if (d.is_breakpoint(t)) continue;
      const double h = 1e-6 * std::max(1.0, t);
      if (std::abs(t - 1.0) < 2 * h) continue;
      const double fd = (d.cdf(t + h) - d.cdf(t - h)) / (2 * h);
      EXPECT_NEAR(fd, d.density(t).value, 1e-6 * std::max(1.0, d.density(t).value)) << d.describe() << " t=" << t;
    }
  }
}

TEST(Properties, QuantileInvertsCdf) {
  for (const auto& d : corpus()) {
    const double lo = d.lower(), hi = std::isfinite(d.upper()) ? d.upper() : d.quantile(0.999);
    for (int i = 1; i < 40; ++i) {
      const double t = lo + (hi - lo) * i / 40.0;
      EXPECT_NEAR(d.quantile(d.cdf(t)), t, 1e-9 * std::max(1.0, t)) << d.describe() << " t=" << t;
    }
  }
}

TEST(Properties, HazardIdentities) {
  for (const auto& d : corpus()) {
    const double lo = d.lower(), hi = std::isfinite(d.upper()) ? d.upper() : d.quantile(0.999);
    for (int i = 1; i < 40; ++i) {
      const double t = lo + (hi - lo) * i / 40.0;
      if (d.is_breakpoint(t)) continue;
      const double f = d.density(t).value;
      EXPECT_NEAR(d.hazard(t) * d.survival(t), f, 1e-12 * std::max(1.0, f));
      EXPECT_NEAR(d.reversed_hazard(t) * d.cdf(t), f, 1e-12 * std::max(1.0, f));
    }
  }
}

TEST(Properties, DensityIntegratesToOne) {
  for (const auto& d : corpus()) {
    std::vector<double> splits(d.breakpoints().begin(), d.breakpoints().end());
    double hi = d.upper();
    double tail = 0.0;
    if (!std::isfinite(hi)) {
      hi = d.quantile(1.0 - 1e-10);
      tail = d.survival(hi);
    }
    QuadratureConfig q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-11;
    const auto r = integrate([&](double t) { return d.pdf(t); }, d.lower(), hi, splits, q);
    EXPECT_NEAR(r.value + tail, 1.0, 1e-8) << d.describe();
  }
}
