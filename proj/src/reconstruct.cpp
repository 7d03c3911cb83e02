// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/reconstruct.hpp"

#include "estool/error.hpp"

namespace estool {

SignedGrayImage edge_integral(const EventFrameTensor& frames, const Trajectory& traj) {
  if (frames.steps != traj.steps())
    throw InvalidInput("edge_integral: frame count does not match trajectory steps");
  const int h = frames.height, w = frames.width;
  SignedGrayImage out{RasterI::Zero(h + 4, w + 4), frames.steps};
  for (int t = 0; t < frames.steps; ++t) {
    const Offset o = traj[t];
    out.values.block(2 - o.y, 2 - o.x, h, w) +=
        frames.plane(0, t).cast<int>() - frames.plane(1, t).cast<int>();
  }
  return out;
}

SignedGrayImage naive_sum(const EventFrameTensor& frames) {
  SignedGrayImage out{RasterI::Zero(frames.height, frames.width), frames.steps};
  for (int t = 0; t < frames.steps; ++t)
    out.values += frames.plane(0, t).cast<int>() - frames.plane(1, t).cast<int>();
  return out;
}

GrayImage to_gray_levels(const SignedGrayImage& s) {
  return GrayImage{s.values + s.steps, 2 * s.steps + 1};
}

RasterI edge_integral_valid_region(const SignedGrayImage& s, int margin) {
  const int inset = margin + 2;
  const int w = s.width() - 2 * inset, h = s.height() - 2 * inset;
  if (margin < 0 || w < 1 || h < 1) throw InvalidInput("valid region margin too large");
  return s.values.block(inset, inset, h, w);
}

}  // namespace estool
