#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "imguard/image.hpp"

namespace imguard {

/// Pluggable protection objective: a nonnegative scalar, its exact gradient,
/// and the feature embedding the scalar is built from. Implementations are
/// deterministic functions of the input and their construction seed.
class AdvObjective {
 public:
  virtual ~AdvObjective() = default;

  virtual double value(const Image& xhat) const = 0;
  virtual Image grad(const Image& xhat) const = 0;

  /// Embedding used both by the objective and by the evaluation harness
  /// (feature displacement between two images).
  virtual std::vector<double> features(const Image& img) const = 0;

  virtual std::string describe() const = 0;
};

/// Fixed random convolutional feature extractor: three 3x3 stride-2
/// zero-padding-1 convolutions (channels 3 -> 8 -> 16 -> 16), each followed
/// by tanh. Biases are zero. Weights are a pure function of the seed:
/// a GaussianStream(seed) is consumed in layer / output-channel /
/// input-channel / kernel-row / kernel-column order, each draw scaled by
/// sqrt(2 / fan_in) with fan_in = in_channels * 9.
class RefEncoder {
 public:
  explicit RefEncoder(std::uint64_t seed);

  struct Latent {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> values;  // row-major, channel-interleaved
  };

  /// Requires 3 channels and H, W divisible by 8 (throws contract_error).
  /// A 64x64x3 input yields an 8x8x16 latent.
  Latent forward(const Image& x) const;

  /// Gradient of sum(latent * upstream) with respect to the input image.
  Image backward(const Image& x, const std::vector<double>& upstream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  struct Layer {
    int in_channels = 0;
    int out_channels = 0;
    std::vector<double> weights;  // [oc][ic][ky][kx]
  };
  Latent forward_impl(const Image& x, std::vector<Latent>* tape) const;

  std::uint64_t seed_;
  std::vector<Layer> layers_;
};

/// ||E(xhat) - target||^2 under a RefEncoder; the default target is the
/// zero latent.
class EncoderObjective : public AdvObjective {
 public:
  explicit EncoderObjective(std::uint64_t seed,
                            std::vector<double> target = {});

  double value(const Image& xhat) const override;
  Image grad(const Image& xhat) const override;
  std::vector<double> features(const Image& img) const override;
  std::string describe() const override;

  const RefEncoder& encoder() const { return encoder_; }

 private:
  RefEncoder encoder_;
  std::vector<double> target_;  // empty = zero latent
};

/// ||block-average-pool(xhat)||^2: a closed-form surrogate whose gradient
/// is 2 * (block mean) / block^2 at every pixel of the block.
class PoolObjective : public AdvObjective {
 public:
  explicit PoolObjective(int block);

  double value(const Image& xhat) const override;
  Image grad(const Image& xhat) const override;
  std::vector<double> features(const Image& img) const override;
  std::string describe() const override;

  int block() const { return block_; }

 private:
  int block_;
};

/// Factory for the config surface: kind is "ref_encoder" or "pool".
std::unique_ptr<AdvObjective> make_objective(const std::string& kind,
                                             std::uint64_t seed, int block);

}  // namespace imguard
