#pragma once

#include <complex>
#include <vector>

#include "imguard/image.hpp"

namespace imguard {

/// Unnormalized 2-D DFT coefficients of a single (channel-averaged) plane.
struct FrequencyMatrix {
  int height = 0;
  int width = 0;
  std::vector<std::complex<double>> coeffs;  // row-major, coeffs[u*width + v]

  std::complex<double> at(int u, int v) const {
    return coeffs[static_cast<std::size_t>(u) * width + v];
  }
};

/// Radial power profile: per band, the mean squared DFT magnitude and the
/// number of frequency coordinates the band covers. Bands partition the
/// grid, so the sizes sum to H*W.
struct SpectrumProfile {
  int band_count = 0;
  std::vector<double> values;
  std::vector<std::size_t> band_sizes;
};

/// Averages channels to one plane, then takes the forward DFT
/// (sign -1, no scaling).
FrequencyMatrix forward_spectrum(const Image& img);

/// Largest centered frequency radius for an H x W grid:
/// sqrt((H/2)^2 + (W/2)^2). Band b covers radii
/// [b, b+1) * max_frequency_radius / B.
double max_frequency_radius(int height, int width);

/// Radially averaged power profile over `bands` proportional-radius bands.
/// Coordinate (u,v) with centered radius r lands in band
/// min(floor(r * B / r_max), B-1). Throws contract_error if a band ends up
/// with no coordinates (B too large for the grid).
SpectrumProfile rapsd(const FrequencyMatrix& f, int bands);

/// Power-spectrum log-ratio loss: the largest per-band
/// |log((rapsd(xhat)+e) / (rapsd(x)+e))| with e = 1e-12.
/// Zero exactly when the two profiles match; symmetric in its arguments.
double l_freq(const Image& xhat, const Image& x, int bands);

/// Subgradient of l_freq with respect to xhat, taken at the maximizing
/// band (ties resolved toward the lowest band index; the all-tied case at
/// zero loss yields the zero image).
Image l_freq_grad(const Image& xhat, const Image& x, int bands);

}  // namespace imguard
