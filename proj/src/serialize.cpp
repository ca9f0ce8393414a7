#include "deplm/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "deplm/csv.hpp"

namespace deplm {

namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::string kernel_name(KernelId id) {
  return std::string(TaperKernel::from_id(id).name());
}

std::string to_csv(const AutocovSequence& acov) {
  std::ostringstream out;
  out << "lag,acov\n";
  for (int k = 0; k <= acov.max_lag(); ++k) {
    out << k << ',' << format_double(acov.values[static_cast<std::size_t>(k)]) << '\n';
  }
  return out.str();
}

std::string to_csv_matrix(const Eigen::MatrixXd& matrix) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_double(matrix(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::string covariance_sidecar_json(const CovarianceEstimate& estimate) {
  json out{{"bandwidth", estimate.bandwidth.h},
           {"kept_lags", estimate.bandwidth.kept_lags},
           {"kernel", kernel_name(estimate.kernel_id)},
           {"psd", estimate.psd},
           {"n", estimate.n},
           {"p", estimate.matrix.rows()}};
  return out.dump(2) + "\n";
}

std::string to_json(const UnivariateTest& test, const CovarianceEstimate& estimate) {
  json out{{"index", test.coefficient_index},
           {"statistic", test.statistic},
           {"p_value", test.p_value},
           {"reject_at_5pct", test.reject_at_5pct},
           {"bandwidth", estimate.bandwidth.h},
           {"kernel", kernel_name(estimate.kernel_id)}};
  return out.dump(2) + "\n";
}

std::string to_json(const JointTest& test, const CovarianceEstimate& estimate) {
  json out{{"indices", test.indices},
           {"statistic", test.statistic},
           {"dof", test.degrees},
           {"p_value", test.p_value},
           {"reject_at_5pct", test.p_value < 0.05},
           {"bandwidth", estimate.bandwidth.h},
           {"kernel", kernel_name(estimate.kernel_id)}};
  return out.dump(2) + "\n";
}

std::string to_json(const DesignDiagnostics& diagnostics) {
  json rho = json::array();
  for (const LagCrossMoment& moment : diagnostics.rho_hat) {
    rho.push_back(json{{"k", moment.k}, {"matrix", matrix_to_json(moment.matrix)}});
  }
  json out{{"d_values", vector_to_json(diagnostics.d_values)},
           {"lindeberg_ratios", vector_to_json(diagnostics.lindeberg_ratios)},
           {"rho_hat", rho},
           {"r0_min_eigenvalue", diagnostics.r0_min_eigenvalue},
           {"lindeberg_warning", diagnostics.lindeberg_warning},
           {"r0_warning", diagnostics.r0_warning}};
  return out.dump(2) + "\n";
}

std::string to_csv(const RhoStabilityProbe& probe) {
  std::ostringstream out;
  out << "prefix_n,value\n";
  for (std::size_t i = 0; i < probe.values.size(); ++i) {
    out << probe.prefix_sizes[i] << ',' << format_double(probe.values[i]) << '\n';
  }
  return out.str();
}

std::string to_csv(const MonteCarloResult& result) {
  std::ostringstream beta;
  for (Eigen::Index i = 0; i < result.model.beta.size(); ++i) {
    if (i > 0) beta << ';';
    beta << format_double(result.model.beta[i]);
  }
  std::ostringstream out;
  out << "n,h,kernel,beta,N,rejection_rate,std_error,failures\n";
  out << result.model.n << ','
      << (result.config.bandwidth ? format_double(*result.config.bandwidth) : "auto") << ','
      << kernel_name(result.config.kernel) << ',' << beta.str() << ','
      << result.config.replications << ',' << format_double(result.rejection_rate) << ','
      << format_double(result.standard_error) << ',' << result.failures << '\n';
  return out.str();
}

std::string to_csv(const ReplicationData& data) {
  std::ostringstream out;
  out << 'y';
  for (Eigen::Index j = 0; j < data.design.p(); ++j) out << ",x" << (j + 1);
  out << '\n';
  for (Eigen::Index i = 0; i < data.design.n(); ++i) {
    out << format_double(data.response[i]);
    for (Eigen::Index j = 0; j < data.design.p(); ++j) {
      out << ',' << format_double(data.design.entries()(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace deplm
