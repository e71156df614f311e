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

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "dcjpeg/block_dct.hpp"
#include "dcjpeg/jpeg_stream.hpp"

namespace dcjpeg {

/// Which block edge two neighbours share. Horizontal: first block is to the left.
/// Vertical: first block is above.
enum class Orientation { Horizontal, Vertical };

enum class BoundaryLoss {
  Mse,    // squared pixel difference across the shared edge
  Trend,  // deviation from the gradient of the neighbour's last two lines
  Both,   // sum of the two
};

enum class ScanMode {
  SingleCorner,       // one raster scan seeded at `RecoveryConfig::seed`
  FourCornerAverage,  // one scan per corner, averaged per block
};

enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };

struct RecoveryConfig {
  int dc_min = -64;
  int dc_max = 64;
  BoundaryLoss loss = BoundaryLoss::Mse;
  ScanMode scan = ScanMode::FourCornerAverage;
  Corner seed = Corner::TopLeft;  // used by SingleCorner only

  /// Throws std::invalid_argument on an empty or out-of-range search window.
  void validate() const;
};

BoundaryLoss parse_loss(std::string_view name);  // "mse" | "trend" | "both"
ScanMode parse_scan_mode(std::string_view name);  // "single" | "avg4"

/// Recovered quantized DC per block, v_n x h_n.
using DcGrid = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Mean squared difference of the 8 pixel pairs straddling the shared edge of a and b.
double boundary_mse(const SampleBlock& a, const SampleBlock& b, Orientation orientation);

/// Mean squared difference between the step across the edge and the step between the
/// last two lines of `prev`, i.e. how far `cur` departs from extrapolating prev's gradient.
double gradient_trend_loss(const SampleBlock& prev, const SampleBlock& cur, Orientation orientation);

/// Best quantized DC for a block given its AC coefficients (the DC entry is ignored) and
/// neighbours whose DC entries already hold recovered values. The search covers
/// [dc_min, dc_max]; the lowest candidate wins ties. Throws NoNeighborError when both
/// neighbours are absent.
int predict_block_dc(const CoeffBlock& ac, const std::optional<CoeffBlock>& left,
                     const std::optional<CoeffBlock>& up, const QuantTable& quant,
                     const RecoveryConfig& cfg);

/// Recovers every DC of a grid whose DCs are zero except at the corners.
/// Corner blocks always take the transmitted values.
DcGrid recover_dc_grid(const CoeffGrid& zeroed, const CornerDcs& corners, const RecoveryConfig& cfg);

/// Copy of `grid` with the DC entries replaced by `dcs`.
CoeffGrid with_dcs(const CoeffGrid& grid, const DcGrid& dcs);

/// Decode, recover the missing DCs, reconstruct.
Image recover_image(const EncodedJpeg& dropped, const RecoveryConfig& cfg);

/// Adds a residual given in units of full scale (1.0 == 255 grey levels), then rounds and clamps.
Image apply_correction(const Image& recovered, const Plane& residual);

}  // namespace dcjpeg
