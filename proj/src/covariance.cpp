#include "deplm/covariance.hpp"

#include <cmath>
#include <string>

#include "deplm/errors.hpp"

namespace deplm {

LagCrossMoment lag_cross_moment(const DesignMatrix& design, const ScalingMatrix& scaling,
                                int k) {
  const Eigen::Index n = design.n();
  if (k < 0 || k > n - 1) {
    throw LagOutOfRange("lag " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  }
  const Eigen::MatrixXd& x = design.entries();
  const Eigen::Index rows = n - k;

  Eigen::MatrixXd b = x.topRows(rows).transpose() * x.bottomRows(rows);
  const Eigen::VectorXd inv = scaling.diag.cwiseInverse();
  b = inv.asDiagonal() * b * inv.asDiagonal();

  // Cauchy-Schwarz bounds the exact values; trim rounding overshoot.
  b = b.cwiseMax(-1.0).cwiseMin(1.0);
  if (k == 0) {
    b = 0.5 * (b + b.transpose()).eval();
    b.diagonal().setOnes();
  }
  return LagCrossMoment{k, std::move(b)};
}

CovarianceEstimate covariance_estimate(const RegressionFit& fit, const DesignMatrix& design,
                                       const TaperKernel& kernel, const Bandwidth& bandwidth) {
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  if (fit.residuals.size() != n || fit.r0_hat.rows() != p) {
    throw DimensionMismatch("fit does not match design");
  }

  // highest lag with positive weight
  int top = static_cast<int>(std::min<double>(
      static_cast<double>(n - 1), std::ceil(bandwidth.h * kernel.support_radius())));
  const std::vector<double> weights = kernel_weights(kernel, bandwidth, top);
  while (top > 0 && weights[static_cast<std::size_t>(top)] == 0.0) --top;

  const AutocovSequence acov = autocovariance(fit.residuals, top);

  Eigen::MatrixXd accum =
      acov.values[0] * lag_cross_moment(design, fit.scaling, 0).matrix;
  for (int k = 1; k <= top; ++k) {
    const double w = weights[static_cast<std::size_t>(k)];
    if (w == 0.0) continue;
    const Eigen::MatrixXd b = lag_cross_moment(design, fit.scaling, k).matrix;
    accum.noalias() += w * acov.values[static_cast<std::size_t>(k)] * (b + b.transpose());
  }

  Eigen::LDLT<Eigen::MatrixXd> r0(fit.r0_hat);
  if (r0.info() != Eigen::Success || r0.rcond() < 1e-12) {
    throw SingularR0("normalized Gram matrix R(0) is numerically singular");
  }
  Eigen::MatrixXd c = r0.solve(r0.solve(accum).transpose()).transpose();
  c = 0.5 * (c + c.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  const bool psd = min_eig >= -1e-8 * c.trace() / static_cast<double>(p);

  return CovarianceEstimate{std::move(c), bandwidth, kernel.id(), psd, min_eig, n};
}

Eigen::MatrixXd inverse_sqrt_spd(const Eigen::MatrixXd& matrix) {
  const Eigen::Index p = matrix.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(matrix);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (!(min_eig > 1e-12 * matrix.trace() / static_cast<double>(p))) {
    throw NotPositiveDefinite(
        "covariance matrix is not positive definite (min eigenvalue " +
            std::to_string(min_eig) + "); consider the bartlett kernel, which "
            "guarantees positive definiteness",
        min_eig);
  }
  return eig.eigenvectors() *
         eig.eigenvalues().array().rsqrt().matrix().asDiagonal() *
         eig.eigenvectors().transpose();
}

Eigen::MatrixXd whitening_factor(const CovarianceEstimate& estimate) {
  return inverse_sqrt_spd(estimate.matrix);
}

}  // namespace deplm
