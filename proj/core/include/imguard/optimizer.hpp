#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "imguard/image.hpp"
#include "imguard/objective.hpp"
#include "imguard/region.hpp"

namespace imguard {

/// Hyperparameters of the two-stage protection pipeline.
struct ProtectConfig {
  double epsilon = 16.0 / 255.0;  // l-infinity noise budget
  int stage1_steps = 50;          // Adam steps on omega
  int stage2_steps = 100;         // PGD steps on delta
  double stage1_lr = 0.1;         // Adam learning rate
  double stage2_step = 20.0;      // PGD step size (applied to the l2-normalized gradient)
  double lambda = 10.0;           // weight of the spectrum term in stage 2
  int kernel_radius = 7;
  int bands = 32;
  std::uint64_t seed = 0;

  /// Std of the stage-1 probe noise; defaults to epsilon so the probe has
  /// the magnitude of a realizable perturbation. Set to 1.0 for raw
  /// unit-variance noise.
  std::optional<double> delta0_scale;

  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;

  double effective_delta0_scale() const {
    return delta0_scale.value_or(epsilon);
  }
};

struct Stage1Result {
  RegionBlurState state;
  std::vector<double> trace;  // spectrum loss at each step, pre-update
};

struct Stage2Result {
  Perturbation delta;
  std::vector<std::pair<double, double>> trace;  // (objective, spectrum loss)
};

struct ProtectResult {
  Image xhat;  // unit_range
  Perturbation delta;
  std::vector<double> omega;
  std::vector<double> stage1_trace;
  std::vector<std::pair<double, double>> stage2_trace;
};

/// Stage 1: fit the per-region blur intensities. omega starts at zero, a
/// Gaussian probe noise is sampled once from the seeded stream (scaled by
/// delta0_scale), and Adam minimizes the spectrum loss of
/// compose(x, probe, masks, omega). omega is clamped to the sigma range
/// after every step and boundary-outward gradients are zeroed.
Stage1Result stage1_fit_omega(const Image& x, const MaskSet& masks,
                              const ProtectConfig& cfg);

/// Stage 2: PGD on delta with omega frozen. Per step the update direction
/// is the l2-normalized gradient of objective + lambda * spectrum loss;
/// delta is clamped elementwise to [-epsilon, epsilon]. Steps with gradient
/// norm below 1e-12 are skipped.
Stage2Result stage2_pgd(const Image& x, const MaskSet& masks,
                        const RegionBlurState& state,
                        const AdvObjective& objective,
                        const ProtectConfig& cfg);

/// Full pipeline: stage 1, stage 2, final composition clamped to [0,1].
/// Deterministic given (inputs, cfg.seed, objective seed).
ProtectResult protect(const Image& x, const MaskSet& masks,
                      const AdvObjective& objective, const ProtectConfig& cfg);

}  // namespace imguard
