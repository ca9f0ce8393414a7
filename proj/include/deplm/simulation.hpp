#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "deplm/kernels.hpp"
#include "deplm/model.hpp"
#include "deplm/rng.hpp"

namespace deplm {

// Stationary dependent error process: Z_1 ~ U[0,1],
// Z_{k+1} = (Z_k + eta_{k+1})/2 with eta i.i.d. Bernoulli(1/2), and
// eps_i = sigma * Phi^{-1}(Z_i), so the marginal law is N(0, sigma2).
struct ErrorProcessSpec {
  double sigma2 = 25.0;
  Eigen::Index n = 0;
};

enum class ModelId { model1, model2 };

// model1: Y_i = b0 + b1 (i^2 + X_i) + eps_i
// model2: Y_i = b0 + b1 (log(i) + sin(i) + X_i) + b2 i + eps_i
// with X_i a stationary Gaussian AR(1), independent of the errors.
struct ModelSpec {
  ModelId model_id = ModelId::model1;
  Eigen::VectorXd beta;  // (b0, b1) or (b0, b1, b2)
  Eigen::Index n = 0;
  double design_ar_variance = 9.0;  // stationary variance of X_i
  double design_ar_coeff = 0.5;     // autoregressive coefficient of X_i

  static ModelSpec model1(double beta1, Eigen::Index n, double beta0 = 3.0);
  static ModelSpec model2(double beta1, double beta2, Eigen::Index n, double beta0 = 3.0);

  Eigen::Index num_regressors() const noexcept {
    return model_id == ModelId::model1 ? 2 : 3;
  }
};

Eigen::VectorXd simulate_errors(const ErrorProcessSpec& spec, RngStream& rng);

// Design columns with the stochastic AR component supplied explicitly
// (pass zeros to obtain the deterministic trend alone).
DesignMatrix assemble_design(const ModelSpec& spec, const Eigen::VectorXd& ar_path);

DesignMatrix simulate_design(const ModelSpec& spec, RngStream& rng);

enum class TestKind { t_on_beta1, joint_on_beta1_beta2 };

struct MonteCarloConfig {
  TestKind test = TestKind::t_on_beta1;
  std::optional<double> bandwidth;  // nullopt: band rule on each replication's residuals
  KernelId kernel = KernelId::paper;
  int replications = 2000;
  std::uint64_t seed = 0;
  double error_sigma2 = 25.0;
  int max_lag = 30;  // autocovariance depth for the automatic bandwidth
  int threads = 0;   // 0: DEPLM_THREADS, then hardware concurrency
};

struct MonteCarloResult {
  ModelSpec model;
  MonteCarloConfig config;
  int rejections = 0;
  int failures = 0;  // replications with an unusable C_n, never silently dropped
  double rejection_rate = 0.0;
  double standard_error = 0.0;  // sqrt(r (1-r) / N)
};

// Frequency of 5%-level rejections over seeded replications. Replication r
// draws from substreams (seed, r, design) and (seed, r, errors), so results
// are bit-identical for any thread count. Fit errors propagate; replications
// whose covariance is unusable are counted in `failures`.
MonteCarloResult run_level_power(const ModelSpec& model, const MonteCarloConfig& config);

// The exact draw a given replication of run_level_power sees.
struct ReplicationData {
  DesignMatrix design;
  Eigen::VectorXd response;
  Eigen::VectorXd errors;
};

ReplicationData simulate_replication(const ModelSpec& model, const MonteCarloConfig& config,
                                     int replication);

}  // namespace deplm
