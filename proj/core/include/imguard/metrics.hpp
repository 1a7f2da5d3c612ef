#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imguard/image.hpp"
#include "imguard/objective.hpp"
#include "imguard/purify.hpp"

namespace imguard {

/// Peak signal-to-noise ratio in dB with MAX = 1; returns +infinity when
/// the images are identical (the documented sentinel).
double psnr(const Image& a, const Image& b);

/// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5), C1 = 0.01^2,
/// C2 = 0.03^2, valid-window map averaged over positions and channels.
/// Requires min(H, W) >= 11.
double ssim(const Image& a, const Image& b);

/// Squared feature displacement ||features(candidate) - features(x)||^2
/// under the objective's embedding; zero means the candidate's features
/// have been pulled back onto the clean image's.
double protection_strength(const Image& x, const Image& candidate,
                           const AdvObjective& objective);

struct PurifierScores {
  double psnr_vs_original = 0.0;
  double ssim_vs_original = 0.0;
  double protection_strength = 0.0;
};

/// Per-sample worst-case evaluation: each purifier is applied independently
/// to the protected image; the worst case is the minimum strength over the
/// battery (the unpurified strength when the battery is empty).
struct EvalReport {
  std::vector<std::pair<std::string, PurifierScores>> per_purifier;
  double pre_purification_strength = 0.0;
  double worst_case_strength = 0.0;
  double robustness_ratio = 0.0;  // worst / pre, 0 when pre == 0
};

EvalReport evaluate(const Image& x, const Image& xhat,
                    const std::vector<PurifyOp>& purifiers,
                    const AdvObjective& objective);

/// JSON with the exact report field names; infinities serialize as "inf".
std::string eval_report_json(const EvalReport& report);

/// CSV of per-purifier rows: spec, psnr, ssim, strength.
std::string eval_report_csv(const EvalReport& report);

}  // namespace imguard
