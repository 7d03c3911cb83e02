// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "estool/image_io.hpp"

namespace estool::testing {

RgbImage noise_image(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      img.set(x, y, {static_cast<std::uint8_t>(rng() & 0xFF), static_cast<std::uint8_t>(rng() & 0xFF),
                     static_cast<std::uint8_t>(rng() & 0xFF)});
  return img;
}

RgbImage scene_image(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double gx = u(rng) * 180.0, gy = u(rng) * 180.0, base = u(rng) * 60.0;
  std::vector<double> value(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      value[static_cast<std::size_t>(y) * w + x] = base + gx * x / w + gy * y / h;
  for (int r = 0; r < 4; ++r) {
    const int x0 = static_cast<int>(u(rng) * w), y0 = static_cast<int>(u(rng) * h);
    const int x1 = std::min(w, x0 + 1 + static_cast<int>(u(rng) * w / 2));
    const int y1 = std::min(h, y0 + 1 + static_cast<int>(u(rng) * h / 2));
    const double level = u(rng) * 255.0;
    for (int y = y0; y < y1; ++y)
      for (int x = x0; x < x1; ++x) value[static_cast<std::size_t>(y) * w + x] = level;
  }
  std::normal_distribution<double> noise(0.0, 4.0);
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = std::clamp(value[static_cast<std::size_t>(y) * w + x] + noise(rng), 0.0, 255.0);
      const auto m = static_cast<std::uint8_t>(std::lround(v));
      img.set(x, y, {m, static_cast<std::uint8_t>(m / 2), static_cast<std::uint8_t>(m / 3)});
    }
  }
  return img;
}

EventStream random_stream(int w, int h, int steps, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution on(density), positive(0.5);
  EventStream s{w, h, steps, 0.18f, {}};
  for (int t = 1; t <= steps; ++t)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (on(rng))
          s.events.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                              static_cast<std::uint8_t>(t),
                              static_cast<std::int8_t>(positive(rng) ? 1 : -1)});
  return s;
}

oracle::Grid to_grid(const ValueMap<double>& v) {
  oracle::Grid g(static_cast<std::size_t>(v.rows()), std::vector<double>(static_cast<std::size_t>(v.cols())));
  for (Eigen::Index y = 0; y < v.rows(); ++y)
    for (Eigen::Index x = 0; x < v.cols(); ++x) g[y][x] = v(y, x);
  return g;
}

oracle::Path to_path(const Trajectory& t) {
  oracle::Path p;
  for (const auto& o : t.offsets()) p.emplace_back(o.x, o.y);
  return p;
}

std::vector<oracle::Quad> to_quads(const EventStream& s) {
  std::vector<oracle::Quad> q;
  for (const auto& e : s.events) q.emplace_back(e.x, e.y, e.t, e.p);
  return q;
}

std::filesystem::path photo_dir() { return std::filesystem::path(ESTOOL_DATA_DIR) / "photos"; }

const std::vector<RgbImage>& photos() {
  static const std::vector<RgbImage> cache = [] {
    std::set<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(photo_dir()))
      if (e.path().extension() == ".jpg") files.insert(e.path());
    std::vector<RgbImage> out;
    for (const auto& f : files) out.push_back(read_image(f));
    return out;
  }();
  return cache;
}

std::vector<RgbImage> natural_corpus(std::size_t n, std::uint64_t seed) {
  const auto& src = photos();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side_frac(0.5, 1.0), aspect(0.75, 1.33), coin(0.0, 1.0);
  std::vector<RgbImage> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RgbImage& im = src[i % src.size()];
    const int w = im.width(), h = im.height();
    const int side = static_cast<int>(std::min(w, h) * side_frac(rng));
    const double a = aspect(rng);
    const int cw = std::max(1, std::min(w, static_cast<int>(side * std::sqrt(a))));
    const int ch = std::max(1, std::min(h, static_cast<int>(side / std::sqrt(a))));
    const int x0 = std::uniform_int_distribution<int>(0, w - cw)(rng);
    const int y0 = std::uniform_int_distribution<int>(0, h - ch)(rng);
    const bool mirror = coin(rng) < 0.5;
    RgbImage c(cw, ch);
    for (int y = 0; y < ch; ++y)
      for (int x = 0; x < cw; ++x) c.set(mirror ? cw - 1 - x : x, y, im.at(x0 + x, y0 + y));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace estool::testing
