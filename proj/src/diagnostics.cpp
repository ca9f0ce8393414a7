#include "deplm/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "deplm/errors.hpp"

namespace deplm {

DesignDiagnostics design_diagnostics(const DesignMatrix& design, int max_lag) {
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  if (max_lag < 0 || max_lag > n - 1) {
    throw LagOutOfRange("max_lag " + std::to_string(max_lag) + " outside 0.." +
                        std::to_string(n - 1));
  }
  const ScalingMatrix scaling = column_scalings(design);

  DesignDiagnostics out;
  out.d_values = scaling.diag;
  out.lindeberg_ratios.resize(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    out.lindeberg_ratios[j] =
        design.entries().col(j).cwiseAbs().maxCoeff() / scaling.diag[j];
  }

  out.rho_hat.reserve(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= max_lag; ++k) {
    out.rho_hat.push_back(lag_cross_moment(design, scaling, k));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(out.rho_hat.front().matrix,
                                                     Eigen::EigenvaluesOnly);
  out.r0_min_eigenvalue = eig.eigenvalues().minCoeff();

  out.lindeberg_warning = (out.lindeberg_ratios.array() > 0.5).any();
  out.r0_warning = out.r0_min_eigenvalue < 1e-10;
  return out;
}

RhoStabilityProbe rho_stability(const DesignMatrix& design, int j, int l, int k, int splits) {
  const Eigen::Index n = design.n();
  const Eigen::Index p = design.p();
  if (j < 0 || j >= p || l < 0 || l >= p) {
    throw std::out_of_range("column index outside 0.." + std::to_string(p - 1));
  }
  if (k < 0 || k > n - 1) {
    throw LagOutOfRange("lag " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  }
  if (splits < 2) {
    throw std::invalid_argument("need at least 2 prefix splits");
  }

  const Eigen::MatrixXd& x = design.entries();
  RhoStabilityProbe probe;
  probe.prefix_sizes.reserve(static_cast<std::size_t>(splits));
  probe.values.reserve(static_cast<std::size_t>(splits));
  for (int s = 1; s <= splits; ++s) {
    const Eigen::Index m = (n * s) / splits;
    if (m < 1) continue;
    const double dj = x.col(j).head(m).norm();
    const double dl = x.col(l).head(m).norm();
    double value = std::numeric_limits<double>::quiet_NaN();
    if (m > k && dj > 0.0 && dl > 0.0) {
      value = x.col(j).head(m - k).dot(x.col(l).segment(k, m - k)) / (dj * dl);
    }
    probe.prefix_sizes.push_back(m);
    probe.values.push_back(value);
  }
  return probe;
}

}  // namespace deplm
