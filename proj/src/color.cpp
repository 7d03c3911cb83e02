// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/color.hpp"

#include <cmath>

namespace estool {

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const int max = std::max({r, g, b});
  const int min = std::min({r, g, b});
  const double chroma = max - min;
  HsvPixel px;
  px.v = max / 255.0;
  px.s = max == 0 ? 0.0 : chroma / max;
  if (chroma == 0) {
    px.h = 0.0;
  } else if (max == r) {
    px.h = 60.0 * (g - b) / chroma;
    if (g <= b) px.h += 360.0;
  } else if (max == g) {
    px.h = 60.0 * (b - r) / chroma + 120.0;
  } else {
    px.h = 60.0 * (r - g) / chroma + 240.0;
  }
  if (px.h >= 360.0) px.h -= 360.0;
  return px;
}

GrayImage rgb_to_gray(const RgbImage& img, int levels) {
  if (levels < 2) throw InvalidInput("rgb_to_gray: levels must be >= 2");
  const RasterD lum = (0.299 * img.r.cast<double>() + 0.587 * img.g.cast<double>() +
                       0.114 * img.b.cast<double>()) /
                      255.0 * (levels - 1);
  GrayImage out;
  out.levels = levels;
  out.values = lum.unaryExpr([levels](double v) {
    return std::clamp(static_cast<int>(std::lround(v)), 0, levels - 1);
  });
  return out;
}

RgbImage resize_nearest(const RgbImage& img, int target_w, int target_h) {
  if (img.empty()) throw InvalidInput("resize_nearest: empty source image");
  RgbImage out;
  out.r = resize_nearest(img.r, target_w, target_h);
  out.g = resize_nearest(img.g, target_w, target_h);
  out.b = resize_nearest(img.b, target_w, target_h);
  return out;
}

}  // namespace estool
