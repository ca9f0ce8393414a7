#include "deplm/model.hpp"

#include <string>

#include "deplm/errors.hpp"

namespace deplm {

DesignMatrix::DesignMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.cols() < 1 || entries_.rows() < entries_.cols()) {
    throw DimensionMismatch("design must satisfy n >= p >= 1, got " +
                            std::to_string(entries_.rows()) + " x " +
                            std::to_string(entries_.cols()));
  }
}

ScalingMatrix column_scalings(const DesignMatrix& design) {
  Eigen::VectorXd diag(design.p());
  for (Eigen::Index j = 0; j < design.p(); ++j) {
    diag[j] = design.entries().col(j).norm();
    if (diag[j] <= 0.0) {
      throw ZeroColumn("design column " + std::to_string(j) + " has zero norm");
    }
  }
  return ScalingMatrix{std::move(diag)};
}

RegressionFit fit_ols(const DesignMatrix& design, const ResponseVector& response) {
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  if (response.size() != n) {
    throw DimensionMismatch("response length " + std::to_string(response.size()) +
                            " does not match design rows " + std::to_string(n));
  }

  ScalingMatrix scaling = column_scalings(design);

  // Equilibrate columns to unit norm before factorizing; this keeps the fit
  // invariant under column rescaling and makes the rank test scale-free.
  Eigen::MatrixXd scaled = design.entries() * scaling.diag.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  const Eigen::VectorXd r_diag = qr.matrixR().diagonal().head(p).cwiseAbs();
  const double r_max = r_diag.maxCoeff();
  const double r_min = r_diag.minCoeff();
  if (!(r_min > 1e-12 * r_max)) {
    throw RankDeficient("design is numerically rank deficient (R diagonal ratio " +
                        std::to_string(r_min / r_max) + ")");
  }

  const Eigen::VectorXd beta_scaled = qr.solve(response);
  Eigen::VectorXd beta_hat = beta_scaled.cwiseQuotient(scaling.diag);
  Eigen::VectorXd residuals = response - scaled * beta_scaled;

  Eigen::MatrixXd r0 = scaled.transpose() * scaled;
  r0 = 0.5 * (r0 + r0.transpose()).eval();
  r0 = r0.cwiseMax(-1.0).cwiseMin(1.0);
  r0.diagonal().setOnes();

  return RegressionFit{std::move(beta_hat), std::move(residuals), std::move(scaling),
                       std::move(r0)};
}

}  // namespace deplm
