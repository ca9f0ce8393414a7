// deplm: OLS inference for linear models with short-range dependent errors.
//
// Subcommands: fit, test, autocov, diagnose, simulate. Exit codes:
//   0 success
//   2 malformed input or configuration
//   3 rank-deficient (or zero-norm) design
//   4 covariance estimate unusable (not positive definite / zero variance)

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deplm/autocov.hpp"
#include "deplm/covariance.hpp"
#include "deplm/csv.hpp"
#include "deplm/diagnostics.hpp"
#include "deplm/errors.hpp"
#include "deplm/inference.hpp"
#include "deplm/model.hpp"
#include "deplm/serialize.hpp"
#include "deplm/simulation.hpp"

namespace {

using nlohmann::json;

struct RegressionInput {
  deplm::DesignMatrix design;
  deplm::ResponseVector response;
};

// Response column by name or 0-based index; remaining columns form the design.
RegressionInput load_regression(const std::string& input, const std::string& response,
                                bool add_intercept) {
  const deplm::CsvTable table = deplm::read_csv_file(input);
  int response_col = table.column_index(response);
  if (response_col < 0) {
    try {
      std::size_t consumed = 0;
      response_col = std::stoi(response, &consumed);
      if (consumed != response.size()) response_col = -1;
    } catch (const std::exception&) {
      response_col = -1;
    }
  }
  if (response_col < 0 || response_col >= static_cast<int>(table.header.size())) {
    throw deplm::MalformedInput("response column '" + response + "' not found");
  }

  const Eigen::Index n = static_cast<Eigen::Index>(table.rows());
  const Eigen::Index p_data = static_cast<Eigen::Index>(table.header.size()) - 1;
  if (p_data + (add_intercept ? 1 : 0) < 1) {
    throw deplm::MalformedInput("no regressor columns");
  }

  Eigen::MatrixXd x(n, p_data + (add_intercept ? 1 : 0));
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = table.columns[static_cast<std::size_t>(response_col)][static_cast<std::size_t>(i)];
  }
  Eigen::Index col = 0;
  if (add_intercept) x.col(col++).setOnes();
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (static_cast<int>(j) == response_col) continue;
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i, col) = table.columns[j][static_cast<std::size_t>(i)];
    }
    ++col;
  }
  return RegressionInput{deplm::DesignMatrix(std::move(x)), std::move(y)};
}

// Design-only CSV for diagnose; the response column, when named, is dropped.
deplm::DesignMatrix load_design(const std::string& input, const std::string& response,
                                bool add_intercept) {
  const deplm::CsvTable table = deplm::read_csv_file(input);
  int skip = response.empty() ? -1 : table.column_index(response);
  const Eigen::Index n = static_cast<Eigen::Index>(table.rows());
  const Eigen::Index p_data =
      static_cast<Eigen::Index>(table.header.size()) - (skip >= 0 ? 1 : 0);
  Eigen::MatrixXd x(n, p_data + (add_intercept ? 1 : 0));
  Eigen::Index col = 0;
  if (add_intercept) x.col(col++).setOnes();
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (static_cast<int>(j) == skip) continue;
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i, col) = table.columns[j][static_cast<std::size_t>(i)];
    }
    ++col;
  }
  return deplm::DesignMatrix(std::move(x));
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
  } else {
    deplm::write_text_atomic(output, content);
  }
}

struct PipelineResult {
  deplm::RegressionFit fit;
  deplm::CovarianceEstimate estimate;
  std::optional<double> suggested_h;
};

PipelineResult run_pipeline(const RegressionInput& data, const std::string& kernel_name,
                            const std::string& bandwidth, int max_lag) {
  deplm::RegressionFit fit = deplm::fit_ols(data.design, data.response);
  const deplm::TaperKernel kernel = deplm::TaperKernel::from_name(kernel_name);
  const Eigen::Index n = data.design.n();

  deplm::Bandwidth bw;
  std::optional<double> suggested;
  if (bandwidth == "auto") {
    const int depth = static_cast<int>(std::min<Eigen::Index>(max_lag, n - 1));
    bw = deplm::suggest_bandwidth(deplm::autocovariance(fit.residuals, depth), kernel);
    suggested = bw.h;
  } else {
    double h = 0.0;
    try {
      std::size_t consumed = 0;
      h = std::stod(bandwidth, &consumed);
      if (consumed != bandwidth.size()) throw std::invalid_argument(bandwidth);
    } catch (const std::exception&) {
      throw deplm::MalformedInput("--bandwidth must be 'auto' or a positive real");
    }
    if (!(h > 0.0)) {
      throw deplm::MalformedInput("--bandwidth must be 'auto' or a positive real");
    }
    bw = deplm::make_bandwidth(h, kernel, n);
  }
  deplm::CovarianceEstimate estimate =
      deplm::covariance_estimate(fit, data.design, kernel, bw);
  return PipelineResult{std::move(fit), std::move(estimate), suggested};
}

json fit_report(const PipelineResult& result) {
  json beta = json::array();
  json d = json::array();
  for (Eigen::Index j = 0; j < result.fit.beta_hat.size(); ++j) {
    beta.push_back(result.fit.beta_hat[j]);
    d.push_back(result.fit.scaling.diag[j]);
  }
  json cov_rows = json::array();
  for (Eigen::Index r = 0; r < result.estimate.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < result.estimate.matrix.cols(); ++c) {
      row.push_back(result.estimate.matrix(r, c));
    }
    cov_rows.push_back(row);
  }
  json out{{"beta_hat", beta},
           {"d_values", d},
           {"covariance",
            {{"matrix", cov_rows},
             {"bandwidth", result.estimate.bandwidth.h},
             {"kept_lags", result.estimate.bandwidth.kept_lags},
             {"kernel", deplm::kernel_name(result.estimate.kernel_id)},
             {"psd", result.estimate.psd},
             {"n", result.estimate.n},
             {"p", result.estimate.matrix.rows()}}}};
  if (result.suggested_h) out["suggested_bandwidth"] = *result.suggested_h;
  return out;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> indices;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t consumed = 0;
      const int value = std::stoi(piece, &consumed);
      if (consumed != piece.size()) throw std::invalid_argument(piece);
      indices.push_back(value);
    } catch (const std::exception&) {
      throw deplm::MalformedInput("bad index '" + piece + "' in --indices");
    }
  }
  if (indices.empty()) {
    throw deplm::MalformedInput("--indices must list at least one 0-based index");
  }
  return indices;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"OLS inference for linear models with dependent stationary errors"};
  app.require_subcommand(1);

  std::string input;
  std::string response = "y";
  std::string kernel = "paper";
  std::string bandwidth = "auto";
  std::string output;
  std::string indices_text;
  bool add_intercept = false;
  int max_lag = 30;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* opt = cmd->add_option("--input", input, "input CSV (header row required)");
    if (needs_input) opt->required();
    cmd->add_option("--response", response, "response column name or 0-based index");
    cmd->add_flag("--add-intercept", add_intercept, "prepend a column of ones");
    cmd->add_option("--kernel", kernel, "taper kernel: paper|bartlett|rectangular");
    cmd->add_option("--bandwidth", bandwidth, "taper bandwidth: auto or a positive real");
    cmd->add_option("--max-lag", max_lag, "autocovariance depth for plots and the band rule");
    cmd->add_option("--output", output, "output path (stdout when omitted)");
  };

  CLI::App* fit = app.add_subcommand("fit", "fit OLS and report corrected per-coefficient tests");
  add_common(fit, true);

  CLI::App* test = app.add_subcommand("test", "joint chi-square test on selected coefficients");
  add_common(test, true);
  test->add_option("--indices", indices_text, "comma-separated 0-based coefficient indices")
      ->required();

  CLI::App* autocov_cmd =
      app.add_subcommand("autocov", "residual autocovariances and suggested bandwidth");
  add_common(autocov_cmd, true);

  CLI::App* diagnose = app.add_subcommand("diagnose", "design regularity diagnostics");
  add_common(diagnose, true);
  std::string rho_text;
  int splits = 10;
  diagnose->add_option("--rho", rho_text,
                       "emit the j,l,k cross-moment stability CSV instead of the JSON report");
  diagnose->add_option("--splits", splits, "prefix count for --rho");

  CLI::App* simulate = app.add_subcommand("simulate", "level/power study on the built-in models");
  int model_id = 1;
  double beta0 = 3.0, beta1 = 0.0, beta2 = 0.0;
  long long n_obs = 1000;
  int replications = 2000;
  std::uint64_t seed = 0;
  bool emit_data = false;
  simulate->add_option("--model", model_id, "1 or 2")->check(CLI::Range(1, 2));
  simulate->add_option("--beta0", beta0, "intercept");
  simulate->add_option("--beta1", beta1, "tested coefficient");
  simulate->add_option("--beta2", beta2, "trend coefficient (model 2)");
  simulate->add_option("--n", n_obs, "sample size")->required();
  simulate->add_option("--replications", replications, "Monte Carlo replications");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--kernel", kernel, "taper kernel: paper|bartlett|rectangular");
  simulate->add_option("--bandwidth", bandwidth, "auto or a positive real");
  simulate->add_option("--max-lag", max_lag, "band-rule autocovariance depth");
  simulate->add_flag("--emit-data", emit_data, "write replication 0's (Y, X) CSV and stop");
  simulate->add_option("--output", output, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fit->parsed()) {
    const RegressionInput data = load_regression(input, response, add_intercept);
    const PipelineResult result = run_pipeline(data, kernel, bandwidth, max_lag);
    json report = fit_report(result);
    json tests = json::array();
    for (Eigen::Index j = 0; j < result.fit.beta_hat.size(); ++j) {
      const deplm::UnivariateTest t =
          deplm::t_test(result.fit, result.estimate, static_cast<int>(j));
      tests.push_back(json{{"index", t.coefficient_index},
                           {"statistic", t.statistic},
                           {"p_value", t.p_value},
                           {"reject_at_5pct", t.reject_at_5pct}});
    }
    report["tests"] = tests;
    emit(output, report.dump(2) + "\n");
    return 0;
  }

  if (test->parsed()) {
    const RegressionInput data = load_regression(input, response, add_intercept);
    const PipelineResult result = run_pipeline(data, kernel, bandwidth, max_lag);
    const deplm::JointTest joint =
        deplm::joint_test(result.fit, result.estimate, parse_indices(indices_text));
    json report = fit_report(result);
    report["joint_test"] = json::parse(deplm::to_json(joint, result.estimate));
    emit(output, report.dump(2) + "\n");
    return 0;
  }

  if (autocov_cmd->parsed()) {
    const RegressionInput data = load_regression(input, response, add_intercept);
    const deplm::RegressionFit ols = deplm::fit_ols(data.design, data.response);
    const int depth = static_cast<int>(std::min<Eigen::Index>(max_lag, data.design.n() - 1));
    const deplm::AutocovSequence acov = deplm::autocovariance(ols.residuals, depth);
    if (acov.values[0] <= 0.0) {
      throw deplm::DegenerateSeries("residuals are identically zero");
    }
    emit(output, deplm::to_csv(acov));
    if (acov.n >= 30) {
      const deplm::Bandwidth suggested =
          deplm::suggest_bandwidth(acov, deplm::TaperKernel::from_name(kernel));
      std::cout << "suggested_h=" << deplm::format_double(suggested.h) << "\n";
    } else {
      std::cerr << "note: fewer than 30 observations, no bandwidth suggestion\n";
    }
    return 0;
  }

  if (diagnose->parsed()) {
    const deplm::DesignMatrix design = load_design(input, response, add_intercept);
    if (!rho_text.empty()) {
      const std::vector<int> jlk = parse_indices(rho_text);
      if (jlk.size() != 3) {
        throw deplm::MalformedInput("--rho expects j,l,k");
      }
      const deplm::RhoStabilityProbe probe =
          deplm::rho_stability(design, jlk[0], jlk[1], jlk[2], splits);
      emit(output, deplm::to_csv(probe));
      return 0;
    }
    const int depth = static_cast<int>(std::min<Eigen::Index>(max_lag, design.n() - 1));
    const deplm::DesignDiagnostics diag = deplm::design_diagnostics(design, depth);
    if (diag.lindeberg_warning) {
      std::cerr << "warning: a single observation dominates some design column\n";
    }
    if (diag.r0_warning) {
      std::cerr << "warning: normalized Gram matrix is nearly singular\n";
    }
    emit(output, deplm::to_json(diag));
    return 0;
  }

  // simulate
  const deplm::ModelSpec model =
      model_id == 1 ? deplm::ModelSpec::model1(beta1, n_obs, beta0)
                    : deplm::ModelSpec::model2(beta1, beta2, n_obs, beta0);
  deplm::MonteCarloConfig config;
  config.test = model_id == 1 ? deplm::TestKind::t_on_beta1
                              : deplm::TestKind::joint_on_beta1_beta2;
  config.kernel = deplm::TaperKernel::from_name(kernel).id();
  config.replications = replications;
  config.seed = seed;
  config.max_lag = max_lag;
  if (bandwidth != "auto") {
    double h = 0.0;
    try {
      std::size_t consumed = 0;
      h = std::stod(bandwidth, &consumed);
      if (consumed != bandwidth.size()) throw std::invalid_argument(bandwidth);
    } catch (const std::exception&) {
      throw deplm::MalformedInput("--bandwidth must be 'auto' or a positive real");
    }
    if (!(h > 0.0)) {
      throw deplm::MalformedInput("--bandwidth must be 'auto' or a positive real");
    }
    config.bandwidth = h;
  }

  if (emit_data) {
    emit(output, deplm::to_csv(deplm::simulate_replication(model, config, 0)));
    return 0;
  }

  const deplm::MonteCarloResult result = deplm::run_level_power(model, config);
  const std::string csv = deplm::to_csv(result);
  if (output.empty()) {
    std::cout << csv;
  } else {
    deplm::write_text_atomic(output, csv);
    std::cout << "model " << model_id << ", n=" << n_obs << ", h="
              << (config.bandwidth ? deplm::format_double(*config.bandwidth) : "auto")
              << ", kernel=" << kernel << ": rejection rate "
              << deplm::format_double(result.rejection_rate) << " +/- "
              << deplm::format_double(result.standard_error) << " (" << result.failures
              << " failures)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const deplm::RankDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const deplm::ZeroColumn& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const deplm::NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const deplm::NonPositiveVariance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const deplm::DegenerateSeries& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const deplm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
