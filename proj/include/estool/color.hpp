// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "estool/error.hpp"
#include "estool/raster.hpp"

namespace estool {

/// 8-bit RGB image stored as three planar channels of equal size.
struct RgbImage {
  RasterU8 r, g, b;

  RgbImage() = default;
  RgbImage(int width, int height) : r(height, width), g(height, width), b(height, width) {
    r.setZero();
    g.setZero();
    b.setZero();
  }

  int width() const { return static_cast<int>(r.cols()); }
  int height() const { return static_cast<int>(r.rows()); }
  bool empty() const { return r.size() == 0; }

  std::array<std::uint8_t, 3> at(int x, int y) const { return {r(y, x), g(y, x), b(y, x)}; }
  void set(int x, int y, std::array<std::uint8_t, 3> rgb) {
    r(y, x) = rgb[0];
    g(y, x) = rgb[1];
    b(y, x) = rgb[2];
  }

  bool operator==(const RgbImage& o) const {
    return r.rows() == o.r.rows() && r.cols() == o.r.cols() && (r == o.r).all() &&
           (g == o.g).all() && (b == o.b).all();
  }
};

struct HsvPixel {
  double h = 0.0;  // degrees, [0, 360)
  double s = 0.0;  // [0, 1]
  double v = 0.0;  // [0, 1]
};

/// HSV value channel, V = max(R, G, B) / 255.
template <typename Scalar = double>
using ValueMap = Raster<Scalar>;

/// Quantized luminance with values in [0, levels - 1].
struct GrayImage {
  RasterI values;
  int levels = 256;

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
};

/// Hexcone RGB to HSV. The M = G and M = B hue branches use (B - R) and (R - G).
HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

template <typename Scalar = double>
ValueMap<Scalar> value_map(const RgbImage& img) {
  return img.r.max(img.g).max(img.b).template cast<Scalar>() / Scalar(255);
}

/// round((0.299 R + 0.587 G + 0.114 B) / 255 * (levels - 1)).
GrayImage rgb_to_gray(const RgbImage& img, int levels);

/// Nearest-neighbour resampling: output (x, y) copies source (x * sw / tw, y * sh / th).
template <typename Derived>
Raster<typename Derived::Scalar> resize_nearest(const Eigen::DenseBase<Derived>& src, int target_w,
                                                int target_h) {
  if (src.size() == 0) throw InvalidInput("resize_nearest: empty source");
  if (target_w < 1 || target_h < 1) throw InvalidInput("resize_nearest: target dims must be >= 1");
  const Eigen::Index sw = src.cols(), sh = src.rows();
  Raster<typename Derived::Scalar> out(target_h, target_w);
  for (Eigen::Index y = 0; y < target_h; ++y) {
    const Eigen::Index sy = y * sh / target_h;
    for (Eigen::Index x = 0; x < target_w; ++x) out(y, x) = src(sy, x * sw / target_w);
  }
  return out;
}

RgbImage resize_nearest(const RgbImage& img, int target_w, int target_h);

template <typename Derived>
Raster<typename Derived::Scalar> zero_pad(const Eigen::DenseBase<Derived>& src, int margin) {
  if (margin < 0) throw InvalidInput("zero_pad: negative margin");
  Raster<typename Derived::Scalar> out =
      Raster<typename Derived::Scalar>::Zero(src.rows() + 2 * margin, src.cols() + 2 * margin);
  out.block(margin, margin, src.rows(), src.cols()) = src;
  return out;
}

}  // namespace estool
