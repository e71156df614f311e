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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "dcjpeg/image.hpp"

namespace dcjpeg {

template <typename Scalar>
using Block8 = Eigen::Matrix<Scalar, 8, 8, Eigen::RowMajor>;

using SampleBlock = Block8<std::uint8_t>;
using CoeffBlock = Block8<int>;

/// Divisors for the 64 coefficients, natural (row-major) order.
struct QuantTable {
  Block8<int> divisors;

  int dc() const { return divisors(0, 0); }
  bool operator==(const QuantTable& other) const { return divisors == other.divisors; }
};

/// Luminance table of the JPEG standard (Annex K) at quality 50.
const QuantTable& q50();

/// Orthonormal 8-point DCT-II basis: row k holds the k-th cosine.
template <typename Scalar>
Block8<Scalar> dct_basis() {
  Block8<Scalar> basis;
  for (int k = 0; k < 8; ++k) {
    const Scalar alpha = k == 0 ? std::sqrt(Scalar(1) / 8) : std::sqrt(Scalar(2) / 8);
    for (int n = 0; n < 8; ++n) {
      basis(k, n) = alpha * std::cos(std::numbers::pi_v<Scalar> * (2 * n + 1) * k / 16);
    }
  }
  return basis;
}

/// Level shift by -128 then separable DCT-2D. DC equals the sum of shifted samples over 8.
template <typename Scalar, typename Derived>
Block8<Scalar> forward_dct(const Eigen::MatrixBase<Derived>& samples) {
  static const Block8<Scalar> basis = dct_basis<Scalar>();
  const Block8<Scalar> shifted = (samples.template cast<Scalar>().array() - Scalar(128)).matrix();
  Block8<Scalar> out = basis * shifted * basis.transpose();
  out(0, 0) = shifted.sum() / 8;  // exact for integer samples
  return out;
}

/// Inverse DCT-2D without the level shift, rounding or clamping.
/// The DC term contributes exactly coeffs(0,0) / 8 to every sample.
template <typename Scalar, typename Derived>
Block8<Scalar> inverse_dct_real(const Eigen::MatrixBase<Derived>& coeffs) {
  static const Block8<Scalar> basis = dct_basis<Scalar>();
  Block8<Scalar> ac = coeffs.template cast<Scalar>();
  const Scalar dc = ac(0, 0);
  ac(0, 0) = 0;
  Block8<Scalar> out = basis.transpose() * ac * basis;
  out.array() += dc / 8;
  return out;
}

/// Decoder output: inverse DCT, +128, round half away from zero, clamp to [0, 255].
SampleBlock inverse_dct(const Block8<double>& coeffs);

CoeffBlock quantize(const Block8<double>& coeffs, const QuantTable& q);
Block8<double> dequantize(const CoeffBlock& block, const QuantTable& q);

/// Quantized blocks of an image in raster order, plus the true image size.
struct CoeffGrid {
  int block_rows = 0;  // v_n
  int block_cols = 0;  // h_n
  int width = 0;       // unpadded image width
  int height = 0;      // unpadded image height
  std::vector<CoeffBlock> blocks;
  QuantTable quant;

  CoeffBlock& at(int row, int col) { return blocks[static_cast<std::size_t>(row) * block_cols + col]; }
  const CoeffBlock& at(int row, int col) const {
    return blocks[static_cast<std::size_t>(row) * block_cols + col];
  }
  int dc(int row, int col) const { return at(row, col)(0, 0); }

  bool operator==(const CoeffGrid& other) const = default;
};

/// Requires dimensions that are multiples of 8.
CoeffGrid image_to_coeff_grid(const Image& img, const QuantTable& q = q50());

/// Pads by edge replication and records the original size in the grid.
CoeffGrid image_to_coeff_grid_padded(const Image& img, const QuantTable& q = q50());

/// Reconstructs the padded raster and crops it to grid.width x grid.height.
Image coeff_grid_to_image(const CoeffGrid& grid);

}  // namespace dcjpeg
