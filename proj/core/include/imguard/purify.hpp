#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imguard/image.hpp"

namespace imguard {

enum class ResampleMethod { kBilinear, kBicubic };

/// One purification transform, or a left-to-right chain of them.
/// Parsed from the spec mini-grammar:
///   jpeg:65
///   noise:0.05:seed=9
///   rescale:2:bicubic
///   gauss_blur:1.0
///   chain(jpeg:65,rescale:2:bicubic,rescale:0.5:bicubic)
struct PurifyOp {
  enum class Kind { kJpeg, kGaussNoise, kRescale, kGaussBlur, kComposite };

  Kind kind = Kind::kJpeg;
  int jpeg_quality = 65;
  double noise_std = 0.0;
  std::uint64_t noise_seed = 0;
  double rescale_factor = 1.0;
  ResampleMethod method = ResampleMethod::kBicubic;
  double blur_sigma = 1.0;
  std::vector<PurifyOp> steps;  // composite only, non-empty
  std::string spec;             // the string this op was parsed from
};

/// Parses one op spec. Throws domain_error on syntax errors, unknown ops,
/// or out-of-range parameters.
PurifyOp parse_purify_op(const std::string& spec);

/// Parses a ';'-separated battery of op specs.
std::vector<PurifyOp> parse_battery(const std::string& specs);

/// The evaluation battery used by default: plain JPEG, JPEG + up/down
/// resampling, noisy up/down resampling, and a Gaussian blur control.
std::vector<PurifyOp> default_battery();

/// Applies the op. Requires img.unit_range(); the result is clamped to
/// [0,1] and flagged. Deterministic given the op parameters and seed.
Image purify(const Image& img, const PurifyOp& op);

/// DCT-quantization equivalent of JPEG: BT.601 full-range color transform,
/// planes padded to multiples of 8 by edge replication, per-block
/// orthonormal DCT-II, quantization by the standard luminance/chrominance
/// tables scaled with the IJG quality rule, inverse transform, clamp.
/// No chroma subsampling and no entropy coding.
Image jpeg_like(const Image& img, int quality);

/// Bilinear or bicubic (Catmull-Rom, a = -0.5) resampling with half-pixel
/// center alignment and clamp-to-edge taps. Output dims = round(dim*factor);
/// throws domain_error when a dimension would collapse to zero.
Image rescale_image(const Image& img, double factor, ResampleMethod method);

/// img + std * N(0, I) from the seeded stream, clamped to [0,1].
Image add_gaussian_noise(const Image& img, double std, std::uint64_t seed);

/// Depthwise Gaussian blur of an image (radius ceil(3*sigma), normalized).
Image gaussian_blur_image(const Image& img, double sigma);

}  // namespace imguard
