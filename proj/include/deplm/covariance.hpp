#pragma once

#include <Eigen/Dense>

#include "deplm/autocov.hpp"
#include "deplm/kernels.hpp"
#include "deplm/model.hpp"

namespace deplm {

// B_{k,n}: entry (j,l) = sum_{m=1}^{n-k} x_{m,j} x_{m+k,l} / (d_j d_l).
// Every entry lies in [-1,1]; B_{0,n} is symmetric with unit diagonal.
// The negative-lag matrix B_{-k,n} is the transpose of B_{k,n}.
struct LagCrossMoment {
  int k = 0;
  Eigen::MatrixXd matrix;
};

LagCrossMoment lag_cross_moment(const DesignMatrix& design, const ScalingMatrix& scaling,
                                int k);

struct CovarianceEstimate {
  Eigen::MatrixXd matrix;  // C_n, symmetric p x p
  Bandwidth bandwidth;
  KernelId kernel_id = KernelId::paper;
  bool psd = false;  // min eigenvalue >= -1e-8 * trace / p
  double min_eigenvalue = 0.0;
  Eigen::Index n = 0;  // sample size behind the estimate
};

// Covariance of the scaled estimator D(n) (beta_hat - beta), accumulated
// lag by lag:
//
//   C_n = R0^{-1} [ g0 B_0 + sum_{k>=1} K(k/h) g_k (B_k + B_k^t) ] R0^{-1}
//
// which equals D (X^tX)^{-1} X^t TaperedToeplitz(g) X (X^tX)^{-1} D without
// ever forming an n x n matrix. Result is symmetrized. Throws SingularR0.
CovarianceEstimate covariance_estimate(const RegressionFit& fit, const DesignMatrix& design,
                                       const TaperKernel& kernel, const Bandwidth& bandwidth);

// Symmetric (spectral) inverse square root of an SPD matrix; throws
// NotPositiveDefinite when the minimum eigenvalue is <= 1e-12 * trace / p.
Eigen::MatrixXd inverse_sqrt_spd(const Eigen::MatrixXd& matrix);

// C_n^{-1/2}, the whitening factor of the pivotal statistic
// C_n^{-1/2} D(n) (beta_hat - beta).
Eigen::MatrixXd whitening_factor(const CovarianceEstimate& estimate);

}  // namespace deplm
