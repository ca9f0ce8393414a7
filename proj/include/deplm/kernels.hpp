#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace deplm {

enum class KernelId { paper, bartlett, rectangular };

// Symmetric taper kernel: K(0) = 1, K >= 0, compact support [-radius, radius].
//
//   paper       : 1 on |x| < 0.8, 5 - 5|x| on 0.8 <= |x| <= 1, 0 beyond
//   bartlett    : max(0, 1 - |x|); positive definite
//   rectangular : indicator of |x| <= 1; its Fourier transform is not
//                 integrable, so consistency is not guaranteed (diagnostic only)
class TaperKernel {
 public:
  static TaperKernel paper();
  static TaperKernel bartlett();
  static TaperKernel rectangular();
  static TaperKernel from_id(KernelId id);
  static TaperKernel from_name(std::string_view name);  // throws MalformedInput

  double operator()(double x) const noexcept;
  double support_radius() const noexcept { return 1.0; }
  KernelId id() const noexcept { return id_; }
  std::string_view name() const noexcept;

  // Scale factor of the bandwidth rule: a suggested cutoff lag k0 maps to
  // h = k0 / flat_fraction so that lags 0..k0-1 keep full weight.
  double flat_fraction() const noexcept;

  bool diagnostic_only() const noexcept { return id_ == KernelId::rectangular; }

 private:
  explicit TaperKernel(KernelId id) : id_(id) {}
  KernelId id_;
};

// Taper scale h; kept_lags counts lags k in 0..n-1 with K(k/h) > 0.
struct Bandwidth {
  double h = 1.0;
  int kept_lags = 1;
};

// Clamps h so that h * radius <= n - 1 (h is left unchanged when n == 1,
// where only lag 0 exists anyway). Throws std::invalid_argument for h <= 0.
Bandwidth make_bandwidth(double h, const TaperKernel& kernel, Eigen::Index n);

// weight[k] = K(k / h) for k = 0..max_lag.
std::vector<double> kernel_weights(const TaperKernel& kernel, const Bandwidth& bandwidth,
                                   int max_lag);

}  // namespace deplm
