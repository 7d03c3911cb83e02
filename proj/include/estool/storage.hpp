// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "estool/generator.hpp"

namespace estool {

// EVS layout, little-endian:
//   "ESEV" | version u16 = 1 | width u16 | height u16 | T u8 | reserved u8 | thresh f32 | count u64
// followed by count records of x u16 | y u16 | t u8 | p i8, strictly ordered by (t, y, x).
inline constexpr std::size_t kEvsHeaderBytes = 24;
inline constexpr std::size_t kEvsRecordBytes = 6;
inline constexpr std::uint16_t kEvsVersion = 1;

std::vector<std::uint8_t> encode_stream(const EventStream& s);
EventStream decode_stream(std::span<const std::uint8_t> bytes);

void write_stream(std::ostream& out, const EventStream& s);
void write_stream(const std::filesystem::path& path, const EventStream& s);
EventStream read_stream(std::istream& in);
EventStream read_stream(const std::filesystem::path& path);

/// Dense binary occupancy in (c, t, y, x) row-major order; c = 0 positive, c = 1 negative.
struct EventFrameTensor {
  int steps = 0;
  int height = 0;
  int width = 0;
  float thresh = 0.0f;
  std::vector<std::uint8_t> cells;

  EventFrameTensor() = default;
  EventFrameTensor(int steps, int height, int width, float thresh = 0.0f)
      : steps(steps), height(height), width(width), thresh(thresh),
        cells(static_cast<std::size_t>(2) * steps * height * width, 0) {}

  std::size_t index(int c, int t, int y, int x) const {
    return ((static_cast<std::size_t>(c) * steps + t) * height + y) * width + x;
  }
  std::uint8_t& at(int c, int t, int y, int x) { return cells[index(c, t, y, x)]; }
  std::uint8_t at(int c, int t, int y, int x) const { return cells[index(c, t, y, x)]; }

  /// One (channel, 0-based step) frame as an Eigen view.
  Eigen::Map<const RasterU8> plane(int c, int t) const {
    return Eigen::Map<const RasterU8>(cells.data() + index(c, t, 0, 0), height, width);
  }

  friend bool operator==(const EventFrameTensor&, const EventFrameTensor&) = default;
};

EventFrameTensor to_event_frames(const EventStream& s);
EventStream from_event_frames(const EventFrameTensor& frames);

// Frame-tensor file: "ESFR" | version u16 = 1 | width u16 | height u16 | T u8 | channels u8 = 2 |
// thresh f32 | cell_count u64, then cell_count bytes in (c, t, y, x) order.
inline constexpr std::size_t kFrameHeaderBytes = 24;
std::vector<std::uint8_t> encode_frames(const EventFrameTensor& frames);
EventFrameTensor decode_frames(std::span<const std::uint8_t> bytes);
void write_frames(const std::filesystem::path& path, const EventFrameTensor& frames);
EventFrameTensor read_frames(const std::filesystem::path& path);

/// "x,y,t,p" header, then one decimal row per event in stream order.
void export_csv(std::ostream& out, const EventStream& s);
/// CSV carries no geometry, so the frame description is supplied by the caller.
EventStream import_csv(std::istream& in, int width, int height, int steps, float thresh);

}  // namespace estool
