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

#include "dcjpeg/block_dct.hpp"

#include <string>

#include "dcjpeg/errors.hpp"

namespace dcjpeg {

const QuantTable& q50() {
  static const QuantTable table = [] {
    QuantTable t;
    t.divisors << 16, 11, 10, 16, 24, 40, 51, 61,   //
        12, 12, 14, 19, 26, 58, 60, 55,             //
        14, 13, 16, 24, 40, 57, 69, 56,             //
        14, 17, 22, 29, 51, 87, 80, 62,             //
        18, 22, 37, 56, 68, 109, 103, 77,           //
        24, 35, 55, 64, 81, 104, 113, 92,           //
        49, 64, 78, 87, 103, 121, 120, 101,         //
        72, 92, 95, 98, 112, 100, 103, 99;
    return t;
  }();
  return table;
}

SampleBlock inverse_dct(const Block8<double>& coeffs) {
  const Block8<double> spatial = inverse_dct_real<double>(coeffs);
  return spatial.unaryExpr([](double v) { return clamp_to_u8(v + 128.0); });
}

CoeffBlock quantize(const Block8<double>& coeffs, const QuantTable& q) {
  CoeffBlock out;
  for (int i = 0; i < 64; ++i) {
    out.data()[i] = static_cast<int>(round_half_away(coeffs.data()[i] / q.divisors.data()[i]));
  }
  return out;
}

Block8<double> dequantize(const CoeffBlock& block, const QuantTable& q) {
  return block.cwiseProduct(q.divisors).cast<double>();
}

CoeffGrid image_to_coeff_grid(const Image& img, const QuantTable& q) {
  if (img.rows() % 8 != 0 || img.cols() % 8 != 0 || img.size() == 0) {
    throw DimensionError("image " + std::to_string(img.cols()) + "x" + std::to_string(img.rows()) +
                         " is not a multiple of 8 in both directions");
  }
  CoeffGrid grid;
  grid.block_rows = static_cast<int>(img.rows() / 8);
  grid.block_cols = static_cast<int>(img.cols() / 8);
  grid.width = static_cast<int>(img.cols());
  grid.height = static_cast<int>(img.rows());
  grid.quant = q;
  grid.blocks.resize(static_cast<std::size_t>(grid.block_rows) * grid.block_cols);
  for (int by = 0; by < grid.block_rows; ++by) {
    for (int bx = 0; bx < grid.block_cols; ++bx) {
      const SampleBlock samples = img.block<8, 8>(8 * by, 8 * bx).matrix();
      grid.at(by, bx) = quantize(forward_dct<double>(samples), q);
    }
  }
  return grid;
}

CoeffGrid image_to_coeff_grid_padded(const Image& img, const QuantTable& q) {
  CoeffGrid grid = image_to_coeff_grid(pad_replicate(img, 8), q);
  grid.width = static_cast<int>(img.cols());
  grid.height = static_cast<int>(img.rows());
  return grid;
}

Image coeff_grid_to_image(const CoeffGrid& grid) {
  Image padded(8 * grid.block_rows, 8 * grid.block_cols);
  for (int by = 0; by < grid.block_rows; ++by) {
    for (int bx = 0; bx < grid.block_cols; ++bx) {
      padded.block<8, 8>(8 * by, 8 * bx) =
          inverse_dct(dequantize(grid.at(by, bx), grid.quant)).array();
    }
  }
  if (grid.width == padded.cols() && grid.height == padded.rows()) return padded;
  return padded.topLeftCorner(grid.height, grid.width);
}

}  // namespace dcjpeg
