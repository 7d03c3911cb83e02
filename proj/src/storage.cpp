// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/storage.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "estool/error.hpp"

namespace estool {
namespace {

constexpr char kEvsMagic[4] = {'E', 'S', 'E', 'V'};
constexpr char kFrameMagic[4] = {'E', 'S', 'F', 'R'};

class ByteWriter {
 public:
  explicit ByteWriter(std::vector<std::uint8_t>& out) : out_(out) {}
  void raw(const char* p, std::size_t n) { out_.insert(out_.end(), p, p + n); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v));
    u8(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }

 private:
  std::vector<std::uint8_t>& out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}
  std::size_t remaining() const { return in_.size() - pos_; }
  void need(std::size_t n, const char* what) const {
    if (remaining() < n) throw FormatError(FormatErrc::kTruncated, what);
  }
  std::uint8_t u8() { return in_[pos_++]; }
  std::uint16_t u16() {
    std::uint16_t v = in_[pos_] | static_cast<std::uint16_t>(in_[pos_ + 1] << 8);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  float f32() { return std::bit_cast<float>(u32()); }
  bool magic(const char (&m)[4]) {
    const bool ok = std::memcmp(in_.data() + pos_, m, 4) == 0;
    pos_ += 4;
    return ok;
  }
  const std::uint8_t* cursor() const { return in_.data() + pos_; }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return slurp(in);
}

void dump(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::vector<std::uint8_t> encode_stream(const EventStream& s) {
  validate_stream(s);
  std::vector<std::uint8_t> bytes;
  bytes.reserve(kEvsHeaderBytes + kEvsRecordBytes * s.events.size());
  ByteWriter w(bytes);
  w.raw(kEvsMagic, 4);
  w.u16(kEvsVersion);
  w.u16(static_cast<std::uint16_t>(s.width));
  w.u16(static_cast<std::uint16_t>(s.height));
  w.u8(static_cast<std::uint8_t>(s.steps));
  w.u8(0);
  w.f32(s.thresh);
  w.u64(s.events.size());
  for (const auto& e : s.events) {
    w.u16(e.x);
    w.u16(e.y);
    w.u8(e.t);
    w.u8(static_cast<std::uint8_t>(e.p));
  }
  return bytes;
}

EventStream decode_stream(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  r.need(4, "EVS magic");
  if (!r.magic(kEvsMagic)) throw FormatError(FormatErrc::kBadMagic, "not an EVS stream");
  r.need(2, "EVS version");
  if (const auto version = r.u16(); version != kEvsVersion)
    throw FormatError(FormatErrc::kVersionMismatch, "EVS version " + std::to_string(version));
  r.need(kEvsHeaderBytes - 6, "EVS header");
  EventStream s;
  s.width = r.u16();
  s.height = r.u16();
  s.steps = r.u8();
  r.u8();
  s.thresh = r.f32();
  const std::uint64_t count = r.u64();
  if (s.width == 0 || s.height == 0)
    throw FormatError(FormatErrc::kOutOfRange, "EVS frame has zero area");

  if (count > r.remaining() / kEvsRecordBytes)
    throw FormatError(FormatErrc::kTruncated, "EVS records: header promises " +
                                                  std::to_string(count) + " events");
  if (r.remaining() != count * kEvsRecordBytes)
    throw FormatError(FormatErrc::kTrailingData, "bytes after the last EVS record");

  s.events.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    EventQuad& e = s.events[i];
    e.x = r.u16();
    e.y = r.u16();
    e.t = r.u8();
    e.p = static_cast<std::int8_t>(r.u8());
    if (e.x >= s.width || e.y >= s.height || e.t < 1 || e.t > s.steps || (e.p != 1 && e.p != -1))
      throw FormatError(FormatErrc::kOutOfRange, "EVS record " + std::to_string(i));
    if (i > 0 && !event_order(s.events[i - 1], e))
      throw FormatError(FormatErrc::kUnsorted, "EVS record " + std::to_string(i));
  }
  return s;
}

void write_stream(std::ostream& out, const EventStream& s) {
  const auto bytes = encode_stream(s);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("EVS write failed");
}

void write_stream(const std::filesystem::path& path, const EventStream& s) {
  dump(path, encode_stream(s));
}

EventStream read_stream(std::istream& in) { return decode_stream(slurp(in)); }

EventStream read_stream(const std::filesystem::path& path) { return decode_stream(slurp(path)); }

EventFrameTensor to_event_frames(const EventStream& s) {
  validate_stream(s);
  EventFrameTensor f(s.steps, s.height, s.width, s.thresh);
  for (const auto& e : s.events) f.at(e.p > 0 ? 0 : 1, e.t - 1, e.y, e.x) = 1;
  return f;
}

EventStream from_event_frames(const EventFrameTensor& frames) {
  EventStream s;
  s.width = frames.width;
  s.height = frames.height;
  s.steps = frames.steps;
  s.thresh = frames.thresh;
  for (int t = 0; t < frames.steps; ++t) {
    for (int y = 0; y < frames.height; ++y) {
      for (int x = 0; x < frames.width; ++x) {
        const bool on = frames.at(0, t, y, x) != 0;
        const bool off = frames.at(1, t, y, x) != 0;
        if (on && off) throw InvalidInput("frame tensor has both polarities at one cell");
        if (on || off)
          s.events.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                              static_cast<std::uint8_t>(t + 1),
                              static_cast<std::int8_t>(on ? 1 : -1)});
      }
    }
  }
  return s;
}

std::vector<std::uint8_t> encode_frames(const EventFrameTensor& frames) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(kFrameHeaderBytes + frames.cells.size());
  ByteWriter w(bytes);
  w.raw(kFrameMagic, 4);
  w.u16(kEvsVersion);
  w.u16(static_cast<std::uint16_t>(frames.width));
  w.u16(static_cast<std::uint16_t>(frames.height));
  w.u8(static_cast<std::uint8_t>(frames.steps));
  w.u8(2);
  w.f32(frames.thresh);
  w.u64(frames.cells.size());
  bytes.insert(bytes.end(), frames.cells.begin(), frames.cells.end());
  return bytes;
}

EventFrameTensor decode_frames(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  r.need(4, "frame magic");
  if (!r.magic(kFrameMagic)) throw FormatError(FormatErrc::kBadMagic, "not an event-frame file");
  r.need(2, "frame version");
  if (const auto version = r.u16(); version != kEvsVersion)
    throw FormatError(FormatErrc::kVersionMismatch, "frame version " + std::to_string(version));
  r.need(kFrameHeaderBytes - 6, "frame header");
  const int width = r.u16();
  const int height = r.u16();
  const int steps = r.u8();
  const int channels = r.u8();
  const float thresh = r.f32();
  const std::uint64_t count = r.u64();
  if (channels != 2) throw FormatError(FormatErrc::kOutOfRange, "frame channel count must be 2");
  EventFrameTensor f(steps, height, width, thresh);
  if (count != f.cells.size()) throw FormatError(FormatErrc::kOutOfRange, "frame cell count");
  r.need(count, "frame cells");
  if (r.remaining() != count) throw FormatError(FormatErrc::kTrailingData, "bytes after frames");
  std::copy(r.cursor(), r.cursor() + count, f.cells.begin());
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    if (f.cells[i] > 1) throw FormatError(FormatErrc::kOutOfRange, "frame cell not binary");
  const std::size_t plane = f.cells.size() / 2;
  for (std::size_t i = 0; i < plane; ++i)
    if (f.cells[i] && f.cells[plane + i])
      throw FormatError(FormatErrc::kOutOfRange, "both polarities set at one cell");
  return f;
}

void write_frames(const std::filesystem::path& path, const EventFrameTensor& frames) {
  dump(path, encode_frames(frames));
}

EventFrameTensor read_frames(const std::filesystem::path& path) {
  return decode_frames(slurp(path));
}

void export_csv(std::ostream& out, const EventStream& s) {
  out << "x,y,t,p\n";
  for (const auto& e : s.events)
    out << e.x << ',' << e.y << ',' << static_cast<int>(e.t) << ',' << static_cast<int>(e.p) << '\n';
  if (!out) throw IoError("CSV write failed");
}

EventStream import_csv(std::istream& in, int width, int height, int steps, float thresh) {
  EventStream s;
  s.width = width;
  s.height = height;
  s.steps = steps;
  s.thresh = thresh;
  std::string line;
  if (!std::getline(in, line) || line != "x,y,t,p")
    throw FormatError(FormatErrc::kBadMagic, "CSV header must be x,y,t,p");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    int fields[4];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < 4; ++i) {
      auto [next, ec] = std::from_chars(p, end, fields[i]);
      if (ec != std::errc() || (i < 3 && (next == end || *next != ',')) || (i == 3 && next != end))
        throw FormatError(FormatErrc::kMalformed, "CSV line " + std::to_string(lineno));
      p = next + 1;
    }
    if (fields[0] < 0 || fields[0] > 0xFFFF || fields[1] < 0 || fields[1] > 0xFFFF ||
        fields[2] < 0 || fields[2] > 255 || fields[3] < -1 || fields[3] > 1)
      throw FormatError(FormatErrc::kOutOfRange, "CSV line " + std::to_string(lineno));
    s.events.push_back({static_cast<std::uint16_t>(fields[0]), static_cast<std::uint16_t>(fields[1]),
                        static_cast<std::uint8_t>(fields[2]), static_cast<std::int8_t>(fields[3])});
  }
  validate_stream(s);
  return s;
}

}  // namespace estool
