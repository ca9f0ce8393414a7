#pragma once

#include <Eigen/Dense>

namespace deplm {

using ResponseVector = Eigen::VectorXd;

// n x p regression design. Requires n >= p >= 1 at construction; full column
// rank and nonzero column norms are checked when fitting.
class DesignMatrix {
 public:
  explicit DesignMatrix(Eigen::MatrixXd entries);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  Eigen::Index n() const noexcept { return entries_.rows(); }
  Eigen::Index p() const noexcept { return entries_.cols(); }

 private:
  Eigen::MatrixXd entries_;
};

// Diagonal D(n) with d_j(n) = ||column j||_2, all strictly positive.
struct ScalingMatrix {
  Eigen::VectorXd diag;
};

struct RegressionFit {
  Eigen::VectorXd beta_hat;
  Eigen::VectorXd residuals;
  ScalingMatrix scaling;
  // R(0) estimate D^{-1} X^t X D^{-1}: symmetric, unit diagonal, entries in [-1,1].
  Eigen::MatrixXd r0_hat;
};

// d_j(n) = sqrt(sum_i x_{i,j}^2). Throws ZeroColumn if any column vanishes.
ScalingMatrix column_scalings(const DesignMatrix& design);

// Least squares via column-equilibrated Householder QR. Throws
// DimensionMismatch, ZeroColumn, or RankDeficient (smallest/largest R diagonal
// ratio below 1e-12).
RegressionFit fit_ols(const DesignMatrix& design, const ResponseVector& response);

}  // namespace deplm
