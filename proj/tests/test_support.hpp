#pragma once

// Shared test oracles. Everything here recomputes expected values from first
// principles, independently of the library code paths it checks.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "deplm/kernels.hpp"

namespace test_support {

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature
// ---------------------------------------------------------------------------

inline double simpson_slice(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double fm, double whole, double eps,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_slice(f, a, fa, m, fm, flm, left, 0.5 * eps, depth - 1) +
         simpson_slice(f, m, fm, b, fb, frm, right, 0.5 * eps, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_slice(f, a, fa, b, fb, fm, whole, eps, 48);
}

// ---------------------------------------------------------------------------
// probability oracles (quadrature of the densities)
// ---------------------------------------------------------------------------

inline double normal_pdf(double t) {
  return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

inline double normal_cdf_oracle(double x) {
  if (x < -40.0) return 0.0;
  if (x > 40.0) return 1.0;
  // tail integral is well conditioned for every x by symmetry
  const double ax = std::abs(x);
  const double upper_tail = integrate(normal_pdf, ax, ax + 45.0);
  return x >= 0.0 ? 1.0 - upper_tail : upper_tail;
}

inline double chi_square_sf_oracle(double x, int dof) {
  if (x <= 0.0) return 1.0;
  const double a = 0.5 * dof;
  const double log_norm = a * std::log(2.0) + std::lgamma(a);
  auto density = [&](double t) {
    return std::exp((a - 1.0) * std::log(t) - 0.5 * t - log_norm);
  };
  return integrate(density, x, x + 60.0 * std::max(1.0, std::sqrt(2.0 * dof)));
}

// ---------------------------------------------------------------------------
// autocovariance and covariance oracles (direct summation, dense matrices)
// ---------------------------------------------------------------------------

inline std::vector<double> autocov_oracle(const Eigen::VectorXd& series, int max_lag) {
  const Eigen::Index n = series.size();
  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1, 0.0);
  for (int k = 0; k <= max_lag; ++k) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j + k < n; ++j) {
      sum += series[j] * series[j + k];
    }
    out[static_cast<std::size_t>(k)] = sum / static_cast<double>(n);
  }
  return out;
}

// D (X^tX)^{-1} X^t TaperedToeplitz X (X^tX)^{-1} D with the n x n matrix
// built explicitly.
inline Eigen::MatrixXd dense_covariance_oracle(const Eigen::MatrixXd& x,
                                               const Eigen::VectorXd& residuals,
                                               const deplm::TaperKernel& kernel, double h) {
  const Eigen::Index n = x.rows();
  const std::vector<double> gamma = autocov_oracle(residuals, static_cast<int>(n - 1));

  Eigen::MatrixXd tapered(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lag = static_cast<double>(i - j);
      tapered(i, j) =
          kernel(lag / h) * gamma[static_cast<std::size_t>(std::abs(i - j))];
    }
  }

  Eigen::VectorXd d(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) d[j] = x.col(j).norm();

  const Eigen::MatrixXd xtx_inv = (x.transpose() * x).fullPivLu().inverse();
  return d.asDiagonal() * xtx_inv * x.transpose() * tapered * x * xtx_inv *
         d.asDiagonal();
}

// ---------------------------------------------------------------------------
// seeded data generators
// ---------------------------------------------------------------------------

inline Eigen::MatrixXd random_matrix(Eigen::Index n, Eigen::Index p, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = normal(rng);
  }
  return x;
}

inline Eigen::VectorXd random_vector(Eigen::Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

inline Eigen::VectorXd ar1_vector(Eigen::Index n, double coeff, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  v[0] = normal(rng) / std::sqrt(1.0 - coeff * coeff);
  for (Eigen::Index i = 1; i < n; ++i) v[i] = coeff * v[i - 1] + normal(rng);
  return v;
}

}  // namespace test_support
