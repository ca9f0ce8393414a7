#include "deplm/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "deplm/errors.hpp"

namespace deplm {

TaperKernel TaperKernel::paper() { return TaperKernel(KernelId::paper); }
TaperKernel TaperKernel::bartlett() { return TaperKernel(KernelId::bartlett); }
TaperKernel TaperKernel::rectangular() { return TaperKernel(KernelId::rectangular); }

TaperKernel TaperKernel::from_id(KernelId id) { return TaperKernel(id); }

TaperKernel TaperKernel::from_name(std::string_view name) {
  if (name == "paper") return paper();
  if (name == "bartlett") return bartlett();
  if (name == "rectangular") return rectangular();
  throw MalformedInput("unknown kernel '" + std::string(name) +
                       "' (expected paper, bartlett, or rectangular)");
}

double TaperKernel::operator()(double x) const noexcept {
  const double ax = std::abs(x);
  switch (id_) {
    case KernelId::paper:
      if (ax < 0.8) return 1.0;
      if (ax <= 1.0) return 5.0 - 5.0 * ax;
      return 0.0;
    case KernelId::bartlett:
      return ax < 1.0 ? 1.0 - ax : 0.0;
    case KernelId::rectangular:
      return ax <= 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

std::string_view TaperKernel::name() const noexcept {
  switch (id_) {
    case KernelId::paper: return "paper";
    case KernelId::bartlett: return "bartlett";
    case KernelId::rectangular: return "rectangular";
  }
  return "?";
}

double TaperKernel::flat_fraction() const noexcept {
  return id_ == KernelId::paper ? 0.8 : 1.0;
}

Bandwidth make_bandwidth(double h, const TaperKernel& kernel, Eigen::Index n) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive, got " + std::to_string(h));
  }
  if (n < 1) {
    throw std::invalid_argument("sample size must be positive");
  }
  const double radius = kernel.support_radius();
  double clamped = h;
  if (n > 1 && clamped * radius > static_cast<double>(n - 1)) {
    clamped = static_cast<double>(n - 1) / radius;
  }

  int kept = 0;
  const int last = static_cast<int>(std::min<double>(static_cast<double>(n - 1),
                                                     std::ceil(clamped * radius)));
  for (int k = 0; k <= last; ++k) {
    if (kernel(static_cast<double>(k) / clamped) > 0.0) ++kept;
  }
  return Bandwidth{clamped, kept};
}

std::vector<double> kernel_weights(const TaperKernel& kernel, const Bandwidth& bandwidth,
                                   int max_lag) {
  if (max_lag < 0) {
    throw std::invalid_argument("max_lag must be nonnegative");
  }
  std::vector<double> weights(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= max_lag; ++k) {
    weights[static_cast<std::size_t>(k)] = kernel(static_cast<double>(k) / bandwidth.h);
  }
  return weights;
}

}  // namespace deplm
