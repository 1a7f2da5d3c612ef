#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace imguard {

/// Dense H x W x C tensor of doubles, row-major with interleaved channels.
/// Carries both images (values in [0,1] when `unit_range()` holds) and
/// perturbations (signed deltas, never flagged).
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels, double fill = 0.0)
      : height_(height), width_(width), channels_(channels),
        data_(static_cast<std::size_t>(height) * width * channels, fill) {}

  static Image like(const Image& other, double fill = 0.0) {
    return Image(other.height_, other.width_, other.channels_, fill);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(int y, int x, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double at(int y, int x, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Image& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  /// True when every element is known to lie in [0,1] (outputs of the
  /// loaders, the purifiers, and the final protection carry this).
  bool unit_range() const { return unit_range_; }

  /// Copy with every element clamped to [0,1] and the range flag set.
  Image clamped01() const;

  double max_abs() const;
  double l2_norm() const;

 private:
  friend Image load_image(const std::string&);
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
  bool unit_range_ = false;
};

using Perturbation = Image;

/// Reads an 8-bit grayscale or RGB PNG; sample s maps to s/255 exactly.
/// Throws io_error on unreadable files, format_error on palette images,
/// alpha channels, or bit depths other than 8.
Image load_image(const std::string& path);

/// Writes an 8-bit PNG; value x is stored as round-half-up(x*255) clamped
/// to [0,255]. Requires img.unit_range(); throws contract_error otherwise.
void save_image(const Image& img, const std::string& path);

/// One raw binary segmentation map (nonzero = member).
struct BinaryMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  bool member(int y, int x) const {
    return pixels[static_cast<std::size_t>(y) * width + x] != 0;
  }
};

/// Partition of the pixel grid into regions. Region indices are dense in
/// [0, region_count); when any pixel was uncovered by the raw masks the
/// last region is the implicit background.
struct MaskSet {
  int height = 0;
  int width = 0;
  int region_count = 0;
  std::vector<std::int32_t> assignment;   // row-major region index per pixel
  std::vector<std::string> provenance;    // per region: raw-mask index or "background"

  std::int32_t region_of(int y, int x) const {
    return assignment[static_cast<std::size_t>(y) * width + x];
  }

  /// Trivial partition: every pixel in one background region.
  static MaskSet single_region(int height, int width);
};

/// Resolves a list of possibly overlapping, possibly non-covering binary
/// masks into a partition. Overlaps go to the earliest mask in list order;
/// masks left with no pixel are dropped; uncovered pixels form an appended
/// background region. Throws contract_error on shape mismatch.
MaskSet canonicalize_masks(const std::vector<BinaryMask>& raw, int height, int width);

/// Reads a mask PNG: a pixel is a member when any channel is nonzero.
BinaryMask load_mask(const std::string& path);

}  // namespace imguard
