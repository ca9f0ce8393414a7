#pragma once

#include <string>

#include "deplm/autocov.hpp"
#include "deplm/covariance.hpp"
#include "deplm/diagnostics.hpp"
#include "deplm/inference.hpp"
#include "deplm/simulation.hpp"

namespace deplm {

// "lag,acov" rows.
std::string to_csv(const AutocovSequence& acov);

// Row-major p x p values, one matrix row per line.
std::string to_csv_matrix(const Eigen::MatrixXd& matrix);

// {bandwidth, kept_lags, kernel, psd, n, p} companion of the matrix CSV.
std::string covariance_sidecar_json(const CovarianceEstimate& estimate);

std::string to_json(const UnivariateTest& test, const CovarianceEstimate& estimate);
std::string to_json(const JointTest& test, const CovarianceEstimate& estimate);
std::string to_json(const DesignDiagnostics& diagnostics);

// "prefix_n,value" rows.
std::string to_csv(const RhoStabilityProbe& probe);

// "n,h,kernel,beta,N,rejection_rate,std_error,failures" (beta fields joined
// with ';', h is "auto" when the band rule ran per replication).
std::string to_csv(const MonteCarloResult& result);

// "y,x1,..,xp" columns of one simulated replication.
std::string to_csv(const ReplicationData& data);

std::string kernel_name(KernelId id);

}  // namespace deplm
