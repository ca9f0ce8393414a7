#include "deplm/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "deplm/autocov.hpp"
#include "deplm/covariance.hpp"
#include "deplm/errors.hpp"
#include "deplm/inference.hpp"
#include "deplm/prob.hpp"

namespace deplm {

ModelSpec ModelSpec::model1(double beta1, Eigen::Index n, double beta0) {
  ModelSpec spec;
  spec.model_id = ModelId::model1;
  spec.beta = Eigen::Vector2d(beta0, beta1);
  spec.n = n;
  return spec;
}

ModelSpec ModelSpec::model2(double beta1, double beta2, Eigen::Index n, double beta0) {
  ModelSpec spec;
  spec.model_id = ModelId::model2;
  spec.beta = Eigen::Vector3d(beta0, beta1, beta2);
  spec.n = n;
  return spec;
}

Eigen::VectorXd simulate_errors(const ErrorProcessSpec& spec, RngStream& rng) {
  if (spec.n < 1) throw std::invalid_argument("error process length must be positive");
  if (!(spec.sigma2 > 0.0)) throw std::invalid_argument("error variance must be positive");

  const double sigma = std::sqrt(spec.sigma2);
  Eigen::VectorXd errors(spec.n);
  double z = rng.uniform01();
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    const double clamped = std::clamp(z, 1e-15, 1.0 - 1e-15);
    errors[i] = sigma * normal_quantile(clamped);
    if (i + 1 < spec.n) {
      z = 0.5 * (z + (rng.bernoulli_half() ? 1.0 : 0.0));
    }
  }
  return errors;
}

DesignMatrix assemble_design(const ModelSpec& spec, const Eigen::VectorXd& ar_path) {
  if (spec.n < 1) throw std::invalid_argument("sample size must be positive");
  if (ar_path.size() != spec.n) {
    throw DimensionMismatch("AR path length does not match sample size");
  }
  if (spec.beta.size() != spec.num_regressors()) {
    throw DimensionMismatch("coefficient vector length " + std::to_string(spec.beta.size()) +
                            " does not match model");
  }

  Eigen::MatrixXd x(spec.n, spec.num_regressors());
  for (Eigen::Index m = 0; m < spec.n; ++m) {
    const double i = static_cast<double>(m + 1);
    x(m, 0) = 1.0;
    if (spec.model_id == ModelId::model1) {
      x(m, 1) = i * i + ar_path[m];
    } else {
      x(m, 1) = std::log(i) + std::sin(i) + ar_path[m];
      x(m, 2) = i;
    }
  }
  return DesignMatrix(std::move(x));
}

DesignMatrix simulate_design(const ModelSpec& spec, RngStream& rng) {
  if (!(spec.design_ar_variance > 0.0)) {
    throw std::invalid_argument("design AR variance must be positive");
  }
  if (!(std::abs(spec.design_ar_coeff) < 1.0)) {
    throw std::invalid_argument("design AR coefficient must satisfy |a| < 1");
  }
  Eigen::VectorXd path(spec.n);
  const double sd = std::sqrt(spec.design_ar_variance);
  const double innov_sd =
      sd * std::sqrt(1.0 - spec.design_ar_coeff * spec.design_ar_coeff);
  path[0] = sd * rng.gaussian();  // stationary start
  for (Eigen::Index i = 1; i < spec.n; ++i) {
    path[i] = spec.design_ar_coeff * path[i - 1] + innov_sd * rng.gaussian();
  }
  return assemble_design(spec, path);
}

namespace {

enum Outcome : std::uint8_t { kAccept = 0, kReject = 1, kFailure = 2 };

Outcome run_one(const ModelSpec& model, const MonteCarloConfig& config, int replication) {
  RngStream design_rng(config.seed, static_cast<std::uint64_t>(replication),
                       RngStream::Tag::design);
  RngStream error_rng(config.seed, static_cast<std::uint64_t>(replication),
                      RngStream::Tag::errors);

  const DesignMatrix design = simulate_design(model, design_rng);
  const Eigen::VectorXd errors =
      simulate_errors(ErrorProcessSpec{config.error_sigma2, model.n}, error_rng);
  const Eigen::VectorXd response = design.entries() * model.beta + errors;

  const RegressionFit fit = fit_ols(design, response);
  const TaperKernel kernel = TaperKernel::from_id(config.kernel);
  try {
    Bandwidth bandwidth;
    if (config.bandwidth.has_value()) {
      bandwidth = make_bandwidth(*config.bandwidth, kernel, model.n);
    } else {
      const int depth = static_cast<int>(std::min<Eigen::Index>(config.max_lag, model.n - 1));
      bandwidth = suggest_bandwidth(autocovariance(fit.residuals, depth), kernel);
    }
    const CovarianceEstimate estimate = covariance_estimate(fit, design, kernel, bandwidth);
    bool reject = false;
    if (config.test == TestKind::t_on_beta1) {
      reject = t_test(fit, estimate, 1).reject_at_5pct;
    } else {
      reject = joint_test(fit, estimate, {1, 2}).p_value < 0.05;
    }
    return reject ? kReject : kAccept;
  } catch (const NonPositiveVariance&) {
    return kFailure;
  } catch (const NotPositiveDefinite&) {
    return kFailure;
  } catch (const DegenerateSeries&) {
    return kFailure;
  }
}

int resolve_threads(const MonteCarloConfig& config) {
  int threads = config.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("DEPLM_THREADS")) {
      threads = std::atoi(env);
    }
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(1, std::min(threads, config.replications));
}

}  // namespace

MonteCarloResult run_level_power(const ModelSpec& model, const MonteCarloConfig& config) {
  if (config.replications < 1) {
    throw std::invalid_argument("need at least one replication");
  }

  const int total = config.replications;
  std::vector<std::uint8_t> outcomes(static_cast<std::size_t>(total), kAccept);

  const int threads = resolve_threads(config);
  if (threads == 1) {
    for (int r = 0; r < total; ++r) {
      outcomes[static_cast<std::size_t>(r)] = run_one(model, config, r);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
      for (int r = next.fetch_add(1); r < total; r = next.fetch_add(1)) {
        try {
          outcomes[static_cast<std::size_t>(r)] = run_one(model, config, r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Reduce in replication order; identical for every thread count.
  MonteCarloResult result;
  result.model = model;
  result.config = config;
  for (int r = 0; r < total; ++r) {
    if (outcomes[static_cast<std::size_t>(r)] == kReject) ++result.rejections;
    if (outcomes[static_cast<std::size_t>(r)] == kFailure) ++result.failures;
  }
  result.rejection_rate = static_cast<double>(result.rejections) / total;
  result.standard_error =
      std::sqrt(result.rejection_rate * (1.0 - result.rejection_rate) / total);
  return result;
}

ReplicationData simulate_replication(const ModelSpec& model, const MonteCarloConfig& config,
                                     int replication) {
  RngStream design_rng(config.seed, static_cast<std::uint64_t>(replication),
                       RngStream::Tag::design);
  RngStream error_rng(config.seed, static_cast<std::uint64_t>(replication),
                      RngStream::Tag::errors);
  DesignMatrix design = simulate_design(model, design_rng);
  Eigen::VectorXd errors =
      simulate_errors(ErrorProcessSpec{config.error_sigma2, model.n}, error_rng);
  Eigen::VectorXd response = design.entries() * model.beta + errors;
  return ReplicationData{std::move(design), std::move(response), std::move(errors)};
}

}  // namespace deplm
