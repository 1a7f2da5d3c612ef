#pragma once

#include <vector>

#include "imguard/image.hpp"

namespace imguard {

/// Allowed range for the blur intensity sigma. Values are clamped (for
/// derived state) or rejected (for direct kernel construction) outside it.
inline constexpr double kSigmaMin = 0.05;
inline constexpr double kSigmaMax = 10.0;

/// Separable truncated Gaussian kernel on the (2k+1) x (2k+1) grid:
/// weight(u,v) = g(u)*g(v) with g(z) = exp(-z^2 / (2 sigma^2)) / (sigma sqrt(2 pi)),
/// optionally rescaled so the 2-D weights sum to one.
class BlurKernel {
 public:
  /// Throws domain_error when sigma lies outside [kSigmaMin, kSigmaMax] or k < 1.
  static BlurKernel build(double sigma, int radius, bool normalize = true);

  double sigma() const { return sigma_; }
  int radius() const { return radius_; }
  bool normalized() const { return normalized_; }

  /// 1-D factor, length 2k+1, indexed by u+k. The 2-D weights are the
  /// outer product of this vector with itself (exactly rank-1).
  const std::vector<double>& weights_1d() const { return w1d_; }

  double weight(int u, int v) const {
    return w1d_[u + radius_] * w1d_[v + radius_];
  }

  /// Dense (2k+1)^2 row-major weight matrix.
  std::vector<double> matrix() const;

 private:
  BlurKernel() = default;
  double sigma_ = 1.0;
  int radius_ = 1;
  bool normalized_ = true;
  std::vector<double> w1d_;
};

/// Depthwise 2-D convolution with reflect padding (edge-inclusive mirror),
/// output shaped like the input. Linear in `delta`.
Image apply_blur(const Image& delta, const BlurKernel& kernel);

/// Exact adjoint of apply_blur under the standard inner product, padding
/// included: <apply_blur(d), g> == <d, adjoint_blur(g)> for all d, g.
Image adjoint_blur(const Image& upstream, const BlurKernel& kernel);

/// dL/d(sigma) of the blur output, where `upstream` is dL/d(output).
/// Uses dg/dsigma(z) = g(z) * (z^2/sigma^3 - 1/sigma) with the quotient
/// rule applied when the kernel is sum-normalized.
double kernel_sigma_grad(const Image& delta, double sigma, int radius,
                         const Image& upstream, bool normalized = true);

}  // namespace imguard
