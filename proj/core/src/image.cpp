#include "imguard/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "imguard/errors.hpp"

namespace imguard {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

Image Image::clamped01() const {
  Image out = *this;
  for (double& v : out.data_) v = std::clamp(v, 0.0, 1.0);
  out.unit_range_ = true;
  return out;
}

double Image::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Image::l2_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Image load_image(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw io_error("cannot open for reading: " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
    throw format_error("not a PNG file: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw io_error("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw io_error("libpng init failed");
  }

  std::vector<png_bytep> row_ptrs;
  std::vector<png_byte> pixels;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw io_error("libpng failed reading " + path);
  }

  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw format_error("palette PNG not supported: " + path);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA || color_type == PNG_COLOR_TYPE_RGB_ALPHA) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw format_error("alpha channel not supported: " + path);
  }
  if (bit_depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw format_error("bit depth " + std::to_string(bit_depth) +
                       " not supported (8-bit only): " + path);
  }

  const int channels = (color_type == PNG_COLOR_TYPE_RGB) ? 3 : 1;
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  pixels.resize(stride * height);
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) row_ptrs[y] = pixels.data() + y * stride;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  Image img(static_cast<int>(height), static_cast<int>(width), channels);
  for (std::size_t i = 0; i < img.size(); ++i)
    img.data()[i] = static_cast<double>(pixels[i]) / 255.0;
  img.unit_range_ = true;
  return img;
}

void save_image(const Image& img, const std::string& path) {
  if (!img.unit_range())
    throw contract_error("save_image requires a unit-range image (clamp first)");
  if (img.channels() != 1 && img.channels() != 3)
    throw contract_error("save_image supports 1 or 3 channels");

  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw io_error("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw io_error("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw io_error("libpng init failed");
  }

  const std::size_t stride = static_cast<std::size_t>(img.width()) * img.channels();
  std::vector<png_byte> pixels(stride * img.height());
  std::vector<png_bytep> row_ptrs(img.height());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double scaled = std::floor(img.data()[i] * 255.0 + 0.5);  // round half up
    pixels[i] = static_cast<png_byte>(std::clamp(scaled, 0.0, 255.0));
  }
  for (int y = 0; y < img.height(); ++y) row_ptrs[y] = pixels.data() + y * stride;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw io_error("libpng failed writing " + path);
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.width(), img.height(), 8,
               img.channels() == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

MaskSet MaskSet::single_region(int height, int width) {
  MaskSet m;
  m.height = height;
  m.width = width;
  m.region_count = 1;
  m.assignment.assign(static_cast<std::size_t>(height) * width, 0);
  m.provenance = {"background"};
  return m;
}

MaskSet canonicalize_masks(const std::vector<BinaryMask>& raw, int height, int width) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].height != height || raw[i].width != width)
      throw contract_error("mask " + std::to_string(i) + " is " +
                           std::to_string(raw[i].width) + "x" + std::to_string(raw[i].height) +
                           ", expected " + std::to_string(width) + "x" + std::to_string(height));
  }

  const std::size_t n = static_cast<std::size_t>(height) * width;
  std::vector<std::int32_t> owner(n, -1);  // raw-mask index, first wins
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      if (owner[p] < 0 && raw[i].pixels[p] != 0) owner[p] = static_cast<std::int32_t>(i);
    }
  }

  // Compact away masks that retained no pixel, keeping list order; uncovered
  // pixels become the trailing background region.
  std::vector<bool> retained(raw.size(), false);
  bool has_background = false;
  for (std::size_t p = 0; p < n; ++p) {
    if (owner[p] < 0)
      has_background = true;
    else
      retained[owner[p]] = true;
  }

  MaskSet out;
  out.height = height;
  out.width = width;
  std::vector<std::int32_t> region_of_mask(raw.size(), -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (retained[i]) {
      region_of_mask[i] = out.region_count++;
      out.provenance.push_back(std::to_string(i));
    }
  }
  const std::int32_t bg = has_background ? out.region_count++ : -1;
  if (has_background) out.provenance.push_back("background");

  out.assignment.assign(n, bg);
  for (std::size_t p = 0; p < n; ++p)
    if (owner[p] >= 0) out.assignment[p] = region_of_mask[owner[p]];
  return out;
}

BinaryMask load_mask(const std::string& path) {
  const Image img = load_image(path);
  BinaryMask mask;
  mask.height = img.height();
  mask.width = img.width();
  mask.pixels.assign(static_cast<std::size_t>(mask.height) * mask.width, 0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < img.channels(); ++c) {
        if (img.at(y, x, c) > 0.0) {
          mask.pixels[static_cast<std::size_t>(y) * mask.width + x] = 1;
          break;
        }
      }
    }
  }
  return mask;
}

}  // namespace imguard
