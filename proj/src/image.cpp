// Copyright 2026 The dcjpeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcjpeg/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "dcjpeg/errors.hpp"

#ifdef DCJPEG_WITH_PNG
#include <png.h>
#endif

namespace dcjpeg {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

// Header tokenizer for netpbm: skips whitespace and '#' comments.
class PnmHeader {
 public:
  explicit PnmHeader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  long next_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError("PGM header: expected a decimal number");
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (1L << 24)) throw FormatError("PGM header: number too large");
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("PGM header: missing whitespace before raster");
    }
    return pos_ + 1;
  }

  std::size_t pos_ = 2;

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t>& bytes_;
};

#ifdef DCJPEG_WITH_PNG

RgbImage decode_png(const std::vector<std::uint8_t>& bytes, bool* is_gray) {
  // Signature (8) + IHDR length/type (8) + width/height (8), then depth and color type.
  if (bytes.size() < 33 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw FormatError("not a PNG file");
  }
  const int bit_depth = bytes[24];
  const int color_type = bytes[25];
  if (bit_depth != 8) {
    throw FormatError("PNG bit depth " + std::to_string(bit_depth) + " is not 8");
  }

  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError(std::string("malformed PNG: ") + image.message);
  }
  *is_gray = color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA;
  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> raster(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, raster.data(), 0, nullptr)) {
    png_image_free(&image);
    throw FormatError(std::string("malformed PNG: ") + image.message);
  }

  RgbImage out;
  for (auto& c : out.channels) c.resize(image.height, image.width);
  const std::size_t pixels = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < pixels; ++i) {
    for (int c = 0; c < 3; ++c) out.channels[c].data()[i] = raster[3 * i + c];
  }
  return out;
}

std::vector<std::uint8_t> encode_png(const Image& img) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.cols());
  image.height = static_cast<png_uint_32>(img.rows());
  image.format = PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.data(), 0, nullptr)) {
    throw IoError(std::string("PNG encoding failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.data(), 0, nullptr)) {
    throw IoError(std::string("PNG encoding failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

#endif  // DCJPEG_WITH_PNG

[[noreturn, maybe_unused]] void png_unavailable() {
  throw FormatError("PNG support was not compiled in (build with DCJPEG_WITH_PNG)");
}

}  // namespace

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  // Integer form of round(0.299 R + 0.587 G + 0.114 B); the sum is never negative.
  const int scaled = 299 * r + 587 * g + 114 * b;
  return static_cast<std::uint8_t>((scaled + 500) / 1000);
}

Image to_luma(const RgbImage& rgb) {
  Image out(rgb.rows(), rgb.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out.data()[i] = luma(rgb.channels[0].data()[i], rgb.channels[1].data()[i],
                         rgb.channels[2].data()[i]);
  }
  return out;
}

ImageFormat format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" ? ImageFormat::Png : ImageFormat::Pgm;
}

bool png_supported() {
#ifdef DCJPEG_WITH_PNG
  return true;
#else
  return false;
#endif
}

std::vector<std::uint8_t> encode_pgm(const Image& img) {
  const std::string header =
      "P5\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.data(), img.data() + img.size());
  return out;
}

Image decode_pgm(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw FormatError("not a binary PGM (missing P5 magic)");
  }
  PnmHeader header(bytes);
  const long width = header.next_int();
  const long height = header.next_int();
  const long maxval = header.next_int();
  if (width <= 0 || height <= 0) throw FormatError("PGM dimensions must be positive");
  if (maxval != 255) throw FormatError("PGM maxval " + std::to_string(maxval) + " is not 255");
  const std::size_t offset = header.raster_offset();
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (bytes.size() < offset + count) throw FormatError("PGM raster is truncated");
  Image img(height, width);
  std::copy_n(bytes.data() + offset, count, img.data());
  return img;
}

Image load_image(const std::filesystem::path& path, ImageFormat format) {
  const auto bytes = read_file(path);
  if (format == ImageFormat::Pgm) return decode_pgm(bytes);
#ifdef DCJPEG_WITH_PNG
  bool gray = false;
  RgbImage rgb = decode_png(bytes, &gray);
  return gray ? rgb.channels[0] : to_luma(rgb);
#else
  png_unavailable();
#endif
}

Image load_image(const std::filesystem::path& path) {
  return load_image(path, format_from_path(path));
}

RgbImage load_rgb(const std::filesystem::path& path) {
  if (format_from_path(path) == ImageFormat::Pgm) {
    Image gray = load_image(path, ImageFormat::Pgm);
    return RgbImage{{gray, gray, gray}};
  }
#ifdef DCJPEG_WITH_PNG
  bool gray = false;
  return decode_png(read_file(path), &gray);
#else
  png_unavailable();
#endif
}

void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format) {
  if (format == ImageFormat::Pgm) {
    write_file(path, encode_pgm(img));
    return;
  }
#ifdef DCJPEG_WITH_PNG
  write_file(path, encode_png(img));
#else
  png_unavailable();
#endif
}

void save_image(const Image& img, const std::filesystem::path& path) {
  save_image(img, path, format_from_path(path));
}

Image pad_replicate(const Image& img, int multiple) {
  const auto round_up = [multiple](Eigen::Index v) {
    return (v + multiple - 1) / multiple * multiple;
  };
  const Eigen::Index rows = round_up(img.rows());
  const Eigen::Index cols = round_up(img.cols());
  if (rows == img.rows() && cols == img.cols()) return img;
  Image out(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    const Eigen::Index sy = std::min(y, img.rows() - 1);
    for (Eigen::Index x = 0; x < cols; ++x) {
      out(y, x) = img(sy, std::min(x, img.cols() - 1));
    }
  }
  return out;
}

Image from_plane(const Plane& plane) {
  return plane.unaryExpr([](double v) { return clamp_to_u8(v); });
}

}  // namespace dcjpeg
