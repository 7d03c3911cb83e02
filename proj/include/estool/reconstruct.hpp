// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "estool/color.hpp"
#include "estool/storage.hpp"
#include "estool/trajectory.hpp"

namespace estool {

/// Signed accumulation of event frames; every value lies in [-steps, steps].
struct SignedGrayImage {
  RasterI values;
  int steps = 0;

  int width() const { return static_cast<int>(values.cols()); }
  int height() const { return static_cast<int>(values.rows()); }
};

/// Edge-Integral: the (positive - negative) frame of step t is added into a
/// (H + 4) x (W + 4) canvas at origin (2 - ox, 2 - oy), where (ox, oy) is the
/// trajectory position the step started from.
SignedGrayImage edge_integral(const EventFrameTensor& frames, const Trajectory& traj);

/// Direct summation over steps with no spatial alignment; output is H x W.
SignedGrayImage naive_sum(const EventFrameTensor& frames);

/// Shifts by +steps, giving 2 * steps + 1 gray levels.
GrayImage to_gray_levels(const SignedGrayImage& s);

/// Central region of an Edge-Integral canvas matching the generator's valid margin.
RasterI edge_integral_valid_region(const SignedGrayImage& s, int margin);

}  // namespace estool
