// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/generator.hpp"

#include <algorithm>
#include <string>

#include "estool/error.hpp"

namespace estool {

void validate_stream(const EventStream& s) {
  if (s.width < 1 || s.height < 1 || s.width > 0xFFFF || s.height > 0xFFFF)
    throw InvalidInput("stream frame dims out of range");
  if (s.steps < 0 || s.steps > 0xFF) throw InvalidInput("stream step count out of range");
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const auto& e = s.events[i];
    if (e.x >= s.width || e.y >= s.height || e.t < 1 || e.t > s.steps || (e.p != 1 && e.p != -1))
      throw InvalidInput("event " + std::to_string(i) + " violates stream bounds");
    if (i > 0 && !event_order(s.events[i - 1], e))
      throw InvalidInput("events not strictly ordered by (t, y, x) at index " + std::to_string(i));
  }
}

void ConversionConfig::validate() const {
  if (!(thresh > 0.0 && thresh < 1.0)) throw InvalidInput("threshold must lie in (0, 1)");
  if (frame_w < 3 || frame_h < 3) throw InvalidInput("frame dims must be >= 3");
  if (valid_margin < 0 || 2 * valid_margin >= frame_w || 2 * valid_margin >= frame_h)
    throw InvalidInput("valid margin too large for frame");
  if (steps() > 0xFF) throw InvalidInput("at most 255 steps are supported");
}

EventStream events_from_canvas(const ValueMap<double>& canvas, const Trajectory& traj,
                               double thresh) {
  const int fw = static_cast<int>(canvas.cols()) - 2;
  const int fh = static_cast<int>(canvas.rows()) - 2;
  if (fw < 1 || fh < 1) throw InvalidInput("canvas too small for a 2-pixel motion range");
  EventStream s;
  s.width = fw;
  s.height = fh;
  s.steps = traj.steps();
  s.thresh = static_cast<float>(thresh);
  for (int t = 1; t <= traj.steps(); ++t) {
    const Offset a = traj[t - 1], b = traj[t];
    auto step = diff_events(canvas.block(a.y, a.x, fh, fw), canvas.block(b.y, b.x, fh, fw),
                            thresh, t);
    s.events.insert(s.events.end(), step.begin(), step.end());
  }
  return s;
}

EventStream generate_events(const ValueMap<double>& values, const Trajectory& traj, double thresh) {
  if (values.size() == 0) throw InvalidInput("generate_events: zero-area input");
  return events_from_canvas(zero_pad(values, 2), traj, thresh);
}

EventStream generate_events(const RgbImage& img, const ConversionConfig& cfg) {
  cfg.validate();
  if (img.empty()) throw InvalidInput("generate_events: zero-area image");
  const RgbImage resized = resize_nearest(img, cfg.frame_w - 2, cfg.frame_h - 2);
  return generate_events(value_map<double>(resized), cfg.trajectory, cfg.thresh);
}

EventStream valid_region_filter(const EventStream& s, int margin) {
  if (margin < 0 || 2 * margin >= s.width || 2 * margin >= s.height)
    throw InvalidInput("valid_region_filter: margin too large");
  EventStream out = s;
  out.events.clear();
  std::copy_if(s.events.begin(), s.events.end(), std::back_inserter(out.events),
               [&](const EventQuad& e) {
                 return e.x >= margin && e.x < s.width - margin && e.y >= margin &&
                        e.y < s.height - margin;
               });
  return out;
}

}  // namespace estool
