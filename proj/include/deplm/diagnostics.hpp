#pragma once

#include <vector>

#include <Eigen/Dense>

#include "deplm/covariance.hpp"
#include "deplm/model.hpp"

namespace deplm {

// Finite-n evidence for the design regularity conditions. The conditions are
// asymptotic, so everything here is advisory.
struct DesignDiagnostics {
  Eigen::VectorXd d_values;          // d_j(n)
  Eigen::VectorXd lindeberg_ratios;  // sup_i |x_{i,j}| / d_j(n), in (0,1]
  std::vector<LagCrossMoment> rho_hat;  // B_{k,n} for k = 0..max_lag
  double r0_min_eigenvalue = 0.0;
  bool lindeberg_warning = false;  // some ratio > 0.5: one point dominates a column
  bool r0_warning = false;         // min eigenvalue < 1e-10: R(0) nearly singular
};

DesignDiagnostics design_diagnostics(const DesignMatrix& design, int max_lag);

// rho_hat_{j,l}(k) evaluated on nested prefixes of the design (sizes
// s*n/splits); a drifting sequence signals that the normalized cross-moment
// limits may not exist. Prefixes too short for the lag report NaN.
struct RhoStabilityProbe {
  std::vector<Eigen::Index> prefix_sizes;
  std::vector<double> values;
};

RhoStabilityProbe rho_stability(const DesignMatrix& design, int j, int l, int k, int splits);

}  // namespace deplm
