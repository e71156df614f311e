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

#include "dcjpeg/dc_recover.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcjpeg/errors.hpp"

namespace dcjpeg {

namespace {

using EdgeLine = std::array<int, 8>;

// Pixels of `cur` that touch the neighbour: first column (horizontal) or first row (vertical).
EdgeLine leading_edge(const SampleBlock& cur, Orientation o) {
  EdgeLine line;
  for (int i = 0; i < 8; ++i) line[i] = o == Orientation::Horizontal ? cur(i, 0) : cur(0, i);
  return line;
}

// Sum of squared residuals over the 8 edge positions; mean = sum / 8.
std::int64_t edge_cost(const SampleBlock& prev, const EdgeLine& cur, Orientation o,
                       BoundaryLoss loss) {
  std::int64_t mse = 0;
  std::int64_t trend = 0;
  for (int i = 0; i < 8; ++i) {
    const int last = o == Orientation::Horizontal ? prev(i, 7) : prev(7, i);
    const int before_last = o == Orientation::Horizontal ? prev(i, 6) : prev(6, i);
    const int passing = cur[i] - last;
    const int extrapolated = passing - (last - before_last);
    mse += static_cast<std::int64_t>(passing) * passing;
    trend += static_cast<std::int64_t>(extrapolated) * extrapolated;
  }
  switch (loss) {
    case BoundaryLoss::Mse:
      return mse;
    case BoundaryLoss::Trend:
      return trend;
    case BoundaryLoss::Both:
      return mse + trend;
  }
  return mse;
}

// Decoder pixel at (r, c) when the block's DC is `dc`; matches inverse_dct() bit for bit.
std::uint8_t candidate_pixel(const Block8<double>& ac_spatial, int r, int c, int dc_dequantized) {
  return clamp_to_u8(ac_spatial(r, c) + static_cast<double>(dc_dequantized) / 8 + 128.0);
}

SampleBlock pixels_at(const Block8<double>& ac_spatial, int dc, int quant_dc) {
  SampleBlock out;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) out(r, c) = candidate_pixel(ac_spatial, r, c, dc * quant_dc);
  }
  return out;
}

Block8<double> ac_spatial_of(const CoeffBlock& block, const QuantTable& quant) {
  CoeffBlock ac = block;
  ac(0, 0) = 0;
  return inverse_dct_real<double>(dequantize(ac, quant));
}

int search_dc(const Block8<double>& ac_spatial, int quant_dc, const SampleBlock* left,
              const SampleBlock* up, const RecoveryConfig& cfg) {
  if (left == nullptr && up == nullptr) {
    throw NoNeighborError("DC prediction needs at least one recovered neighbour");
  }
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  int best_dc = cfg.dc_min;
  for (int dc = cfg.dc_min; dc <= cfg.dc_max; ++dc) {
    const int dequantized = dc * quant_dc;
    std::int64_t cost = 0;
    if (left != nullptr) {
      EdgeLine column;
      for (int r = 0; r < 8; ++r) column[r] = candidate_pixel(ac_spatial, r, 0, dequantized);
      cost += edge_cost(*left, column, Orientation::Horizontal, cfg.loss);
    }
    if (up != nullptr) {
      EdgeLine row;
      for (int c = 0; c < 8; ++c) row[c] = candidate_pixel(ac_spatial, 0, c, dequantized);
      cost += edge_cost(*up, row, Orientation::Vertical, cfg.loss);
    }
    if (cost < best_cost) {  // strict: the lowest DC keeps ties
      best_cost = cost;
      best_dc = dc;
    }
  }
  return best_dc;
}

struct ScanInput {
  int rows = 0;
  int cols = 0;
  std::vector<Block8<double>> ac_spatial;  // raster order, in scan orientation
  std::vector<std::optional<int>> known;   // transmitted DCs
};

// Raster scan from the top-left of an oriented grid, one DC per block.
DcGrid raster_scan(const ScanInput& in, int quant_dc, const RecoveryConfig& cfg) {
  DcGrid dcs(in.rows, in.cols);
  std::vector<SampleBlock> pixels(in.ac_spatial.size());
  for (int i = 0; i < in.rows; ++i) {
    for (int j = 0; j < in.cols; ++j) {
      const std::size_t n = static_cast<std::size_t>(i) * in.cols + j;
      int dc = 0;
      if (in.known[n]) {
        dc = *in.known[n];
      } else {
        const SampleBlock* left = j > 0 ? &pixels[n - 1] : nullptr;
        const SampleBlock* up = i > 0 ? &pixels[n - static_cast<std::size_t>(in.cols)] : nullptr;
        dc = search_dc(in.ac_spatial[n], quant_dc, left, up, cfg);
      }
      dcs(i, j) = dc;
      pixels[n] = pixels_at(in.ac_spatial[n], dc, quant_dc);
    }
  }
  return dcs;
}

// Mirrors the grid so that `corner` becomes the top-left block.
ScanInput orient(const std::vector<Block8<double>>& ac_spatial,
                 const std::vector<std::optional<int>>& known, int rows, int cols, Corner corner) {
  const bool flip_v = corner == Corner::BottomLeft || corner == Corner::BottomRight;
  const bool flip_h = corner == Corner::TopRight || corner == Corner::BottomRight;
  ScanInput out;
  out.rows = rows;
  out.cols = cols;
  out.ac_spatial.resize(ac_spatial.size());
  out.known.resize(known.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int si = flip_v ? rows - 1 - i : i;
      const int sj = flip_h ? cols - 1 - j : j;
      const std::size_t src = static_cast<std::size_t>(si) * cols + sj;
      const std::size_t dst = static_cast<std::size_t>(i) * cols + j;
      Block8<double> block = ac_spatial[src];
      if (flip_v) block = block.colwise().reverse().eval();
      if (flip_h) block = block.rowwise().reverse().eval();
      out.ac_spatial[dst] = block;
      out.known[dst] = known[src];
    }
  }
  return out;
}

DcGrid unorient(const DcGrid& dcs, Corner corner) {
  const bool flip_v = corner == Corner::BottomLeft || corner == Corner::BottomRight;
  const bool flip_h = corner == Corner::TopRight || corner == Corner::BottomRight;
  DcGrid out = dcs;
  if (flip_v) out = out.colwise().reverse().eval();
  if (flip_h) out = out.rowwise().reverse().eval();
  return out;
}

}  // namespace

void RecoveryConfig::validate() const {
  if (dc_min > dc_max) throw std::invalid_argument("dc_min must not exceed dc_max");
  if (dc_min < -2047 || dc_max > 2047) {
    throw std::invalid_argument("DC search bounds must lie within [-2047, 2047]");
  }
}

BoundaryLoss parse_loss(std::string_view name) {
  if (name == "mse") return BoundaryLoss::Mse;
  if (name == "trend") return BoundaryLoss::Trend;
  if (name == "both") return BoundaryLoss::Both;
  throw std::invalid_argument("unknown loss '" + std::string(name) + "' (mse|trend|both)");
}

ScanMode parse_scan_mode(std::string_view name) {
  if (name == "single") return ScanMode::SingleCorner;
  if (name == "avg4") return ScanMode::FourCornerAverage;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (single|avg4)");
}

double boundary_mse(const SampleBlock& a, const SampleBlock& b, Orientation orientation) {
  return static_cast<double>(edge_cost(a, leading_edge(b, orientation), orientation,
                                       BoundaryLoss::Mse)) /
         8.0;
}

double gradient_trend_loss(const SampleBlock& prev, const SampleBlock& cur, Orientation orientation) {
  return static_cast<double>(edge_cost(prev, leading_edge(cur, orientation), orientation,
                                       BoundaryLoss::Trend)) /
         8.0;
}

int predict_block_dc(const CoeffBlock& ac, const std::optional<CoeffBlock>& left,
                     const std::optional<CoeffBlock>& up, const QuantTable& quant,
                     const RecoveryConfig& cfg) {
  cfg.validate();
  std::optional<SampleBlock> left_pixels;
  std::optional<SampleBlock> up_pixels;
  if (left) left_pixels = inverse_dct(dequantize(*left, quant));
  if (up) up_pixels = inverse_dct(dequantize(*up, quant));
  return search_dc(ac_spatial_of(ac, quant), quant.dc(), left_pixels ? &*left_pixels : nullptr,
                   up_pixels ? &*up_pixels : nullptr, cfg);
}

DcGrid recover_dc_grid(const CoeffGrid& zeroed, const CornerDcs& corners, const RecoveryConfig& cfg) {
  cfg.validate();
  const int rows = zeroed.block_rows;
  const int cols = zeroed.block_cols;
  if (rows <= 0 || cols <= 0) throw DimensionError("empty coefficient grid");

  std::vector<Block8<double>> ac_spatial(zeroed.blocks.size());
  for (std::size_t n = 0; n < zeroed.blocks.size(); ++n) {
    ac_spatial[n] = ac_spatial_of(zeroed.blocks[n], zeroed.quant);
  }
  std::vector<std::optional<int>> known(zeroed.blocks.size());
  const auto index = [cols](int r, int c) { return static_cast<std::size_t>(r) * cols + c; };
  known[index(0, 0)] = corners.top_left;
  known[index(0, cols - 1)] = corners.top_right;
  known[index(rows - 1, 0)] = corners.bottom_left;
  known[index(rows - 1, cols - 1)] = corners.bottom_right;

  const int quant_dc = zeroed.quant.dc();
  if (cfg.scan == ScanMode::SingleCorner) {
    return unorient(raster_scan(orient(ac_spatial, known, rows, cols, cfg.seed), quant_dc, cfg),
                    cfg.seed);
  }

  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> sum =
      Eigen::MatrixXd::Zero(rows, cols);
  for (Corner corner : {Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight}) {
    sum += unorient(raster_scan(orient(ac_spatial, known, rows, cols, corner), quant_dc, cfg), corner)
               .cast<double>();
  }
  // Quarter values are exact in binary, so rounding the mean is exact.
  return (sum / 4.0).unaryExpr([](double v) { return static_cast<int>(round_half_away(v)); });
}

CoeffGrid with_dcs(const CoeffGrid& grid, const DcGrid& dcs) {
  if (dcs.rows() != grid.block_rows || dcs.cols() != grid.block_cols) {
    throw DimensionError("DC grid does not match the coefficient grid");
  }
  CoeffGrid out = grid;
  for (int r = 0; r < grid.block_rows; ++r) {
    for (int c = 0; c < grid.block_cols; ++c) out.at(r, c)(0, 0) = dcs(r, c);
  }
  return out;
}

Image recover_image(const EncodedJpeg& dropped, const RecoveryConfig& cfg) {
  const CoeffGrid grid = decode_baseline(dropped.bytes);
  const DcGrid dcs = recover_dc_grid(grid, extract_corner_dcs(grid), cfg);
  return coeff_grid_to_image(with_dcs(grid, dcs));
}

Image apply_correction(const Image& recovered, const Plane& residual) {
  if (residual.rows() != recovered.rows() || residual.cols() != recovered.cols()) {
    throw DimensionError("residual and image differ in size");
  }
  Image out(recovered.rows(), recovered.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out.data()[i] = clamp_to_u8(recovered.data()[i] + residual.data()[i] * 255.0);
  }
  return out;
}

}  // namespace dcjpeg
