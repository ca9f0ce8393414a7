#pragma once

#include <vector>

#include <Eigen/Dense>

#include "deplm/covariance.hpp"
#include "deplm/model.hpp"

namespace deplm {

// T = d_j(n) beta_hat_j / sqrt(c_{n,(j,j)}), asymptotically standard normal
// under beta_j = 0.
struct UnivariateTest {
  int coefficient_index = 0;
  double statistic = 0.0;
  double p_value = 1.0;
  bool reject_at_5pct = false;
};

// Xi = |Z|^2 with Z = C_sub^{-1/2} (d_j beta_hat_j)_j, asymptotically
// chi-square with |indices| degrees of freedom under the joint null.
struct JointTest {
  std::vector<int> indices;
  double statistic = 0.0;
  int degrees = 0;
  double p_value = 1.0;
  Eigen::VectorXd components;
};

// Two-sided normal p-value. Throws NonPositiveVariance if c_{n,(j,j)} <= 0.
UnivariateTest t_test(const RegressionFit& fit, const CovarianceEstimate& estimate,
                      int coefficient_index);

// Joint chi-square test on a subset of coefficients (0-based indices).
// Throws EmptyIndexSet, NotPositiveDefinite.
JointTest joint_test(const RegressionFit& fit, const CovarianceEstimate& estimate,
                     const std::vector<int>& indices);

}  // namespace deplm
