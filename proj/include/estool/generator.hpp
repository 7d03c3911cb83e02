// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "estool/color.hpp"
#include "estool/trajectory.hpp"

namespace estool {

/// One polar event: frame column x, frame row y, step t in [1, T], polarity p in {+1, -1}.
struct EventQuad {
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::uint8_t t = 0;
  std::int8_t p = 0;

  friend bool operator==(const EventQuad&, const EventQuad&) = default;
};

/// Canonical stream order is (t, y, x).
inline bool event_order(const EventQuad& a, const EventQuad& b) {
  return std::tie(a.t, a.y, a.x) < std::tie(b.t, b.y, b.x);
}

struct EventStream {
  int width = 0;
  int height = 0;
  int steps = 0;
  float thresh = 0.0f;
  std::vector<EventQuad> events;

  friend bool operator==(const EventStream&, const EventStream&) = default;
};

/// Throws InvalidInput unless the stream satisfies its bounds, order and uniqueness invariants.
void validate_stream(const EventStream& s);

struct ConversionConfig {
  double thresh = 0.18;
  Trajectory trajectory = odg_trajectory();
  int frame_w = 256;
  int frame_h = 256;
  int valid_margin = 16;

  int steps() const { return trajectory.steps(); }
  void validate() const;
};

/// p = +1 where next - prev > thresh, p = -1 where next - prev < -thresh.
template <typename DerivedA, typename DerivedB>
std::vector<EventQuad> diff_events(const Eigen::DenseBase<DerivedA>& prev,
                                   const Eigen::DenseBase<DerivedB>& next, double thresh, int t) {
  if (prev.rows() != next.rows() || prev.cols() != next.cols())
    throw InvalidInput("diff_events: window dimensions differ");
  std::vector<EventQuad> out;
  for (Eigen::Index y = 0; y < prev.rows(); ++y) {
    for (Eigen::Index x = 0; x < prev.cols(); ++x) {
      const double d = static_cast<double>(next(y, x)) - static_cast<double>(prev(y, x));
      if (d > thresh || d < -thresh) {
        out.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                       static_cast<std::uint8_t>(t), static_cast<std::int8_t>(d > 0 ? 1 : -1)});
      }
    }
  }
  return out;
}

/// Slides a (width - 2) x (height - 2) window over a padded value canvas along the
/// trajectory and thresholds consecutive windows. Step 0 emits nothing.
EventStream events_from_canvas(const ValueMap<double>& canvas, const Trajectory& traj,
                               double thresh);

/// Full generator: nearest resize to frame - 2, V channel, zero pad 2, then events_from_canvas.
EventStream generate_events(const RgbImage& img, const ConversionConfig& cfg);

/// Events from an already-resized value map (frame dims = map dims + 2).
EventStream generate_events(const ValueMap<double>& values, const Trajectory& traj, double thresh);

/// Keeps events with margin <= x < width - margin and the same for y. Coordinates are kept.
EventStream valid_region_filter(const EventStream& s, int margin);

}  // namespace estool
