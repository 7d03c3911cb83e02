// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "estool/color.hpp"

namespace estool {

/// Binary PPM (P6, maxval 255). Comments in the header are accepted.
RgbImage read_ppm(std::istream& in);
RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(std::ostream& out, const RgbImage& img);
void write_ppm(const std::filesystem::path& path, const RgbImage& img);

/// Binary PGM (P5, maxval 255); values are clamped into [0, 255].
void write_pgm(std::ostream& out, const RasterI& values);
void write_pgm(const std::filesystem::path& path, const RasterI& values);
RasterI read_pgm(std::istream& in);

RgbImage decode_jpeg(const std::vector<unsigned char>& bytes);

/// Reads PPM or JPEG, chosen by the file's leading bytes.
RgbImage read_image(const std::filesystem::path& path);

}  // namespace estool
