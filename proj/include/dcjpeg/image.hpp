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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Core>

namespace dcjpeg {

/// 8-bit grayscale raster, rows() = height, cols() = width, row-major storage.
using Image = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Real-valued raster used for transform math.
template <typename Scalar>
using PlaneT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Plane = PlaneT<double>;

/// Three 8-bit channels of equal size (R, G, B order).
struct RgbImage {
  std::array<Image, 3> channels;

  Eigen::Index rows() const { return channels[0].rows(); }
  Eigen::Index cols() const { return channels[0].cols(); }
};

enum class ImageFormat { Pgm, Png };

/// Round half away from zero. Used for every real-to-integer conversion.
template <typename Scalar>
inline Scalar round_half_away(Scalar v) {
  return std::round(v);  // std::round already rounds halfway cases away from zero
}

inline std::uint8_t clamp_to_u8(double v) {
  const double r = round_half_away(v);
  return static_cast<std::uint8_t>(r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r));
}

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);
Image to_luma(const RgbImage& rgb);

/// Picks the format from the file extension (.png, everything else PGM).
ImageFormat format_from_path(const std::filesystem::path& path);
bool png_supported();

/// Loads a P5 PGM (maxval 255) or 8-bit PNG; color input is converted to luma.
Image load_image(const std::filesystem::path& path, ImageFormat format);
Image load_image(const std::filesystem::path& path);

/// Loads three channels; grayscale sources are replicated into R, G and B.
RgbImage load_rgb(const std::filesystem::path& path);

void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format);
void save_image(const Image& img, const std::filesystem::path& path);

/// Serialized P5 bytes ("P5\n<w> <h>\n255\n" followed by the raster).
std::vector<std::uint8_t> encode_pgm(const Image& img);
Image decode_pgm(const std::vector<std::uint8_t>& bytes);

/// Pads to the next multiple of `multiple` in both directions by edge replication.
Image pad_replicate(const Image& img, int multiple = 8);

inline Plane to_plane(const Image& img) { return img.cast<double>(); }

/// Rounds half away from zero and clamps to [0, 255].
Image from_plane(const Plane& plane);

}  // namespace dcjpeg
