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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dcjpeg/block_dct.hpp"

namespace dcjpeg {

/// Natural (row-major) index of the k-th coefficient in zigzag order.
extern const std::array<int, 64> kZigzagToNatural;

/// A complete baseline JFIF stream.
struct EncodedJpeg {
  std::vector<std::uint8_t> bytes;
  std::size_t scan_len = 0;  // entropy-coded bytes between the SOS header and EOI

  std::size_t total_len() const { return bytes.size(); }
};

/// Baseline sequential, single component, Annex K luminance Huffman tables, no restart markers.
/// Throws CapacityError when a coefficient does not fit the baseline categories.
EncodedJpeg encode_baseline(const CoeffGrid& grid);

/// Decodes a single-component baseline stream back to its quantized coefficients.
/// Throws ParseError, HuffmanError or TruncationError.
CoeffGrid decode_baseline(std::span<const std::uint8_t> bytes);

/// Wraps raw bytes, locating the scan to fill in scan_len.
EncodedJpeg parse_encoded(std::vector<std::uint8_t> bytes);

EncodedJpeg read_jpeg(const std::filesystem::path& path);
void write_jpeg(const EncodedJpeg& jpeg, const std::filesystem::path& path);

/// DC values of the four corner blocks.
struct CornerDcs {
  int top_left = 0;
  int top_right = 0;
  int bottom_left = 0;
  int bottom_right = 0;

  bool operator==(const CornerDcs&) const = default;
};

/// Zeroes every DC except the four corner blocks; AC coefficients are untouched.
CoeffGrid drop_dc(const CoeffGrid& grid);
CornerDcs extract_corner_dcs(const CoeffGrid& grid);

struct CompressionRatio {
  double total = 1.0;  // file length ratio, headers included
  double scan = 1.0;   // entropy-coded segment only
};

CompressionRatio compression_ratio(const EncodedJpeg& original, const EncodedJpeg& dropped);

}  // namespace dcjpeg
