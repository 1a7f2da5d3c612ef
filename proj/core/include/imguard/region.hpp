#pragma once

#include <vector>

#include "imguard/blur.hpp"
#include "imguard/image.hpp"

namespace imguard {

/// Per-region blur intensities in log space: omega[r] = log(sigma_r).
struct RegionBlurState {
  std::vector<double> omega;

  static RegionBlurState zeros(int region_count) {
    return RegionBlurState{std::vector<double>(region_count, 0.0)};
  }
  static RegionBlurState constant(int region_count, double sigma);

  /// sigma_r = exp(omega_r), clamped to [kSigmaMin, kSigmaMax].
  std::vector<double> sigmas() const;
};

/// Protected-image assembly: x + sum_r mask_r * blur(delta; sigma_r), with
/// normalized kernels of the given radius. The full delta is blurred per
/// region and masked afterwards. Output is NOT clamped to [0,1].
Image compose(const Image& x, const Perturbation& delta, const MaskSet& masks,
              const RegionBlurState& state, int radius);

struct ComposeGrads {
  Perturbation delta_grad;
  std::vector<double> omega_grad;  // dL/d(omega_r), chain through sigma = exp(omega)
};

/// Exact gradients of compose: given upstream = dL/d(composed image),
/// returns dL/d(delta) and dL/d(omega) per region.
ComposeGrads compose_grads(const Image& upstream, const Image& x,
                           const Perturbation& delta, const MaskSet& masks,
                           const RegionBlurState& state, int radius);

}  // namespace imguard
