#include "deplm/inference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deplm/errors.hpp"
#include "deplm/prob.hpp"

namespace deplm {

UnivariateTest t_test(const RegressionFit& fit, const CovarianceEstimate& estimate,
                      int coefficient_index) {
  const Eigen::Index p = fit.beta_hat.size();
  if (coefficient_index < 0 || coefficient_index >= p) {
    throw std::out_of_range("coefficient index " + std::to_string(coefficient_index) +
                            " outside 0.." + std::to_string(p - 1));
  }
  const double variance = estimate.matrix(coefficient_index, coefficient_index);
  if (!(variance > 0.0)) {
    throw NonPositiveVariance(
        "estimated variance of coefficient " + std::to_string(coefficient_index) + " is " +
            std::to_string(variance) + "; consider the bartlett kernel, which guarantees "
            "positive definiteness",
        variance);
  }
  const double statistic =
      fit.scaling.diag[coefficient_index] * fit.beta_hat[coefficient_index] /
      std::sqrt(variance);
  const double p_value = 2.0 * (1.0 - normal_cdf(std::abs(statistic)));
  return UnivariateTest{coefficient_index, statistic, p_value, p_value < 0.05};
}

JointTest joint_test(const RegressionFit& fit, const CovarianceEstimate& estimate,
                     const std::vector<int>& indices) {
  if (indices.empty()) {
    throw EmptyIndexSet("joint test needs at least one coefficient index");
  }
  const Eigen::Index p = fit.beta_hat.size();
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= p) {
      throw std::out_of_range("coefficient index " + std::to_string(sorted[i]) +
                              " outside 0.." + std::to_string(p - 1));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("duplicate coefficient index " + std::to_string(sorted[i]));
    }
  }

  const int degrees = static_cast<int>(indices.size());
  Eigen::MatrixXd sub(degrees, degrees);
  Eigen::VectorXd scaled(degrees);
  for (int a = 0; a < degrees; ++a) {
    scaled[a] = fit.scaling.diag[indices[static_cast<std::size_t>(a)]] *
                fit.beta_hat[indices[static_cast<std::size_t>(a)]];
    for (int b = 0; b < degrees; ++b) {
      sub(a, b) = estimate.matrix(indices[static_cast<std::size_t>(a)],
                                  indices[static_cast<std::size_t>(b)]);
    }
  }

  Eigen::VectorXd components = inverse_sqrt_spd(sub) * scaled;
  const double statistic = components.squaredNorm();
  const double p_value = chi_square_sf(statistic, degrees);
  return JointTest{indices, statistic, degrees, p_value, std::move(components)};
}

}  // namespace deplm
