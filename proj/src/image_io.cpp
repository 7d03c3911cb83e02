// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <sstream>

#include <jpeglib.h>

#include "estool/error.hpp"

namespace estool {
namespace {

int read_header_int(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string skip;
      std::getline(in, skip);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value = -1;
  if (!(in >> value) || value < 0) throw FormatError(FormatErrc::kMalformed, "netpbm header");
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  return out;
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

}  // namespace

RgbImage read_ppm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '6')
    throw FormatError(FormatErrc::kBadMagic, "expected binary PPM (P6)");
  const int width = read_header_int(in);
  const int height = read_header_int(in);
  const int maxval = read_header_int(in);
  if (maxval != 255) throw FormatError(FormatErrc::kOutOfRange, "PPM maxval must be 255");
  if (width < 1 || height < 1) throw InvalidInput("PPM image has zero area");
  in.get();  // single whitespace before the raster

  std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height * 3);
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
    throw FormatError(FormatErrc::kTruncated, "PPM raster");
  RgbImage img(width, height);
  std::size_t i = 0;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x, i += 3) img.set(x, y, {raw[i], raw[i + 1], raw[i + 2]});
  return img;
}

RgbImage read_ppm(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const RgbImage& img) {
  out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(img.width()) * img.height() * 3);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto px = img.at(x, y);
      raw.insert(raw.end(), px.begin(), px.end());
    }
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("PPM write failed");
}

void write_ppm(const std::filesystem::path& path, const RgbImage& img) {
  auto out = open_out(path);
  write_ppm(out, img);
}

void write_pgm(std::ostream& out, const RasterI& values) {
  out << "P5\n" << values.cols() << ' ' << values.rows() << "\n255\n";
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(values.size()));
  std::size_t i = 0;
  for (Eigen::Index y = 0; y < values.rows(); ++y)
    for (Eigen::Index x = 0; x < values.cols(); ++x)
      raw[i++] = static_cast<std::uint8_t>(std::clamp(values(y, x), 0, 255));
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("PGM write failed");
}

void write_pgm(const std::filesystem::path& path, const RasterI& values) {
  auto out = open_out(path);
  write_pgm(out, values);
}

RasterI read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
    throw FormatError(FormatErrc::kBadMagic, "expected binary PGM (P5)");
  const int width = read_header_int(in);
  const int height = read_header_int(in);
  const int maxval = read_header_int(in);
  if (maxval != 255) throw FormatError(FormatErrc::kOutOfRange, "PGM maxval must be 255");
  in.get();
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height);
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
    throw FormatError(FormatErrc::kTruncated, "PGM raster");
  RasterI out(height, width);
  for (std::size_t i = 0; i < raw.size(); ++i) out.data()[i] = raw[i];
  return out;
}

RgbImage decode_jpeg(const std::vector<unsigned char>& bytes) {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  // Locals touched after setjmp must not live in registers.
  RgbImage* volatile result = nullptr;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    delete result;
    throw FormatError(FormatErrc::kMalformed, std::string("JPEG: ") + err.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const int width = static_cast<int>(cinfo.output_width);
  const int height = static_cast<int>(cinfo.output_height);
  result = new RgbImage(width, height);
  std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    const int y = static_cast<int>(cinfo.output_scanline);
    JSAMPROW rows[1] = {row.data()};
    jpeg_read_scanlines(&cinfo, rows, 1);
    for (int x = 0; x < width; ++x) result->set(x, y, {row[3 * x], row[3 * x + 1], row[3 * x + 2]});
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  RgbImage out = std::move(*result);
  delete result;
  return out;
}

RgbImage read_image(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() >= 2 && bytes[0] == 0xFF && bytes[1] == 0xD8) return decode_jpeg(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    std::string s(bytes.begin(), bytes.end());
    std::istringstream ss(s);
    return read_ppm(ss);
  }
  throw FormatError(FormatErrc::kBadMagic, "unsupported image format: " + path.string());
}

}  // namespace estool
