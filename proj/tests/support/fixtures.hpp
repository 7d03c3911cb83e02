// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "estool/color.hpp"
#include "estool/generator.hpp"
#include "support/oracles.hpp"

namespace estool::testing {

/// Uniform random RGB bytes.
RgbImage noise_image(int w, int h, std::uint64_t seed);

/// Smooth gradients, a few flat rectangles and mild noise; has both edges and flat areas.
RgbImage scene_image(int w, int h, std::uint64_t seed);

/// Random valid stream: unique, sorted events inside the frame.
EventStream random_stream(int w, int h, int steps, double density, std::uint64_t seed);

/// Copies for the Eigen-free oracles.
oracle::Grid to_grid(const ValueMap<double>& v);
oracle::Path to_path(const Trajectory& t);
std::vector<oracle::Quad> to_quads(const EventStream& s);

std::filesystem::path photo_dir();

/// Genuine photos shipped with the repository, decoded once.
const std::vector<RgbImage>& photos();

/// n natural samples. Sample i is a seeded random crop of photo i mod P: side 50-100% of
/// the photo's short side, aspect 0.75-1.33, random position, 50% horizontal mirror.
std::vector<RgbImage> natural_corpus(std::size_t n, std::uint64_t seed = 7);

}  // namespace estool::testing
