#pragma once

#include <vector>

#include <Eigen/Core>

#include "deplm/kernels.hpp"

namespace deplm {

enum class SeriesSource { residuals, errors };

// Empirical autocovariances with the 1/n divisor at every lag, so
// |values[k]| <= values[0] holds by Cauchy-Schwarz.
struct AutocovSequence {
  std::vector<double> values;  // lags 0..max_lag
  Eigen::Index n = 0;
  SeriesSource source = SeriesSource::residuals;

  int max_lag() const noexcept { return static_cast<int>(values.size()) - 1; }
};

// values[k] = (1/n) * sum_{j=1}^{n-k} series[j] * series[j+k].
// Throws EmptySeries, LagOutOfRange.
AutocovSequence autocovariance(const Eigen::VectorXd& series, int max_lag,
                               SeriesSource source = SeriesSource::residuals);

// (1/2pi) [ K(0) g0 + 2 sum_{k>=1} K(k/h) g_k cos(k lambda) ]; requires acov
// computed to lag >= min(n-1, ceil(h * radius)).
double spectral_density_estimate(const AutocovSequence& acov, const TaperKernel& kernel,
                                 const Bandwidth& bandwidth, double lambda);

// Automated version of choosing h from the autocovariance plot: k0 is the
// smallest lag at which lags k0..min(k0+4, max_lag) all sit inside the
// white-noise band |g_k| <= 1.96 g_0 / sqrt(n); lags 0..k0-1 are retained and
// h = k0 / flat_fraction(kernel), clamped so h * radius <= n - 1. (The paper
// kernel's flat region is closed at 0.8, so the boundary lag k0 also carries
// full weight.) Requires n >= 30; throws DegenerateSeries when g_0 = 0.
Bandwidth suggest_bandwidth(const AutocovSequence& acov, const TaperKernel& kernel);

// Consistency-rate diagnostic h^{1+delta/2} / n^{delta/2}; warns when it
// exceeds 1. delta = 2 corresponds to a fourth-moment error process.
struct BandwidthRateCheck {
  double ratio = 0.0;
  bool warning = false;
};

BandwidthRateCheck check_bandwidth_rate(const Bandwidth& bandwidth, Eigen::Index n,
                                        double moment_exponent = 2.0);

}  // namespace deplm
