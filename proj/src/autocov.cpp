#include "deplm/autocov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "deplm/errors.hpp"

namespace deplm {

AutocovSequence autocovariance(const Eigen::VectorXd& series, int max_lag,
                               SeriesSource source) {
  const Eigen::Index n = series.size();
  if (n == 0) {
    throw EmptySeries("autocovariance of an empty series");
  }
  if (max_lag < 0 || max_lag > n - 1) {
    throw LagOutOfRange("max_lag " + std::to_string(max_lag) + " outside 0.." +
                        std::to_string(n - 1));
  }

  AutocovSequence acov;
  acov.n = n;
  acov.source = source;
  acov.values.resize(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= max_lag; ++k) {
    // divisor n at every lag, not n - k
    acov.values[static_cast<std::size_t>(k)] =
        series.head(n - k).dot(series.tail(n - k)) / static_cast<double>(n);
  }
  return acov;
}

double spectral_density_estimate(const AutocovSequence& acov, const TaperKernel& kernel,
                                 const Bandwidth& bandwidth, double lambda) {
  const int needed = static_cast<int>(std::min<double>(
      static_cast<double>(acov.n - 1), std::ceil(bandwidth.h * kernel.support_radius())));
  if (acov.max_lag() < needed) {
    throw std::invalid_argument("autocovariances computed to lag " +
                                std::to_string(acov.max_lag()) + ", spectral estimate needs " +
                                std::to_string(needed));
  }

  double sum = acov.values[0];  // K(0) = 1
  for (int k = 1; k <= needed; ++k) {
    const double w = kernel(static_cast<double>(k) / bandwidth.h);
    if (w == 0.0) continue;
    sum += 2.0 * w * acov.values[static_cast<std::size_t>(k)] * std::cos(k * lambda);
  }
  return sum / (2.0 * std::numbers::pi);
}

Bandwidth suggest_bandwidth(const AutocovSequence& acov, const TaperKernel& kernel) {
  if (acov.n < 30) {
    throw std::invalid_argument("bandwidth rule needs at least 30 observations, got " +
                                std::to_string(acov.n));
  }
  const double g0 = acov.values[0];
  if (g0 <= 0.0) {
    throw DegenerateSeries("lag-0 autocovariance is zero; bandwidth undefined");
  }

  const double band = 1.96 * g0 / std::sqrt(static_cast<double>(acov.n));
  const int top = acov.max_lag();

  // smallest k0 whose window k0..min(k0+4, top) sits inside the band
  int cutoff = top + 1;
  for (int k0 = 1; k0 <= top; ++k0) {
    bool inside = true;
    const int end = std::min(k0 + 4, top);
    for (int k = k0; k <= end; ++k) {
      if (std::abs(acov.values[static_cast<std::size_t>(k)]) > band) {
        inside = false;
        break;
      }
    }
    if (inside) {
      cutoff = k0;
      break;
    }
  }

  const double h = static_cast<double>(cutoff) / kernel.flat_fraction();
  return make_bandwidth(h, kernel, acov.n);
}

BandwidthRateCheck check_bandwidth_rate(const Bandwidth& bandwidth, Eigen::Index n,
                                        double moment_exponent) {
  if (n < 1) {
    throw std::invalid_argument("sample size must be positive");
  }
  if (!(moment_exponent > 0.0) || moment_exponent > 2.0) {
    throw std::invalid_argument("moment exponent must lie in (0, 2]");
  }
  const double ratio = std::pow(bandwidth.h, 1.0 + moment_exponent / 2.0) /
                       std::pow(static_cast<double>(n), moment_exponent / 2.0);
  return BandwidthRateCheck{ratio, ratio > 1.0};
}

}  // namespace deplm
