// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace estool {

// Rasters are indexed (row, col) == (y, x).
template <typename Scalar>
using Raster = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RasterU8 = Raster<std::uint8_t>;
using RasterI = Raster<int>;
using RasterD = Raster<double>;

}  // namespace estool
