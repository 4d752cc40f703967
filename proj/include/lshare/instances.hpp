#pragma once

#include <string>
#include <vector>

#include "lshare/loadshare.hpp"

namespace lshare {

// Components X_1..X_n, one spare Y, one load share. Structure and allocation are
// chosen by whoever evaluates it.
struct Instance {
  std::string name;
  std::vector<Component> components;
  Component spare;
  double alpha;

  SystemSpec system(Structure structure, std::size_t allocation) const {
    return SystemSpec{components, spare, alpha, structure, allocation};
  }
  LoadSharePair pair(std::size_t allocation) const { return system(Structure::Series, allocation).pair(); }
};

namespace builtin {

// Uniform CDF t/3 on [0, 3].
LifetimeDistribution uniform_0_3();
// CDF t^2/3 on [0, 1], (t^2 + 3)/12 on [1, 3].
LifetimeDistribution quadratic_kink_0_3();

// Exponential components with rates (lambda1, lambda2), exponential spare mu;
// w1 = alpha^2 u, w2 = alpha u, gamma = (1 - alpha) u.
Instance example_2_1(double lambda1 = 1.0, double lambda2 = 1.5, double mu = 2.0, double alpha = 0.5);
// Same model functions; lambda1 >= lambda2; optional extra exponential components.
Instance example_2_2(double lambda1 = 1.5, double lambda2 = 1.0, double mu = 2.0, double alpha = 0.5,
                     const std::vector<double>& extra_rates = {0.5});
// Shifted Pareto components with sigma_i = k_i (support [1, inf)), k1 >= k2, exponential spare.
Instance example_2_3(double k1 = 0.5, double k2 = 0.25, double mu = 1.0, double alpha = 0.5);

// Exponential rates 1 and 1.2, spare rate 2; w1 = 0.5u, w2 = 0.25u, gamma = 0.5u.
Instance counterexample_2_1();
// X1 uniform, X2 kinked quadratic, spare Exp(3); w1 = 0.01u, w2 = 0.1u, gamma = 0.9u.
Instance counterexample_2_2();
// Same as 2.2 with the two component distributions swapped.
Instance counterexample_2_4();

}  // namespace builtin
}  // namespace lshare
