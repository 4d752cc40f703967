#pragma once

#include <functional>
#include <span>

namespace lshare {

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value;
  double error;
  int evaluations;
  bool converged;
};

// Globally adaptive Gauss-Kronrod (7, 15) on [a, b]. `splits` are points inside
// (a, b) where the integrand is not smooth; the initial partition honours them so
// no node lands on a kink. Never throws on non-convergence; see `converged`.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> splits, const QuadratureConfig& config);

}  // namespace lshare
