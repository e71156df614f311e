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

#include "dcjpeg/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "dcjpeg/errors.hpp"

namespace dcjpeg {

namespace {

void require_same_dims(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("images differ in size: " + std::to_string(a.cols()) + "x" +
                         std::to_string(a.rows()) + " vs " + std::to_string(b.cols()) + "x" +
                         std::to_string(b.rows()));
  }
}

std::vector<double> gaussian_taps(int size, double sigma) {
  std::vector<double> taps(static_cast<std::size_t>(size));
  const double center = (size - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - center;
    taps[static_cast<std::size_t>(i)] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += taps[static_cast<std::size_t>(i)];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Separable correlation keeping only positions where the window fits.
Plane filter_valid(const Plane& in, const std::vector<double>& taps) {
  const Eigen::Index n = static_cast<Eigen::Index>(taps.size());
  const Eigen::Index out_rows = in.rows() - n + 1;
  const Eigen::Index out_cols = in.cols() - n + 1;
  Plane horizontal = Plane::Zero(in.rows(), out_cols);
  for (Eigen::Index k = 0; k < n; ++k) {
    horizontal += taps[static_cast<std::size_t>(k)] * in.middleCols(k, out_cols);
  }
  Plane out = Plane::Zero(out_rows, out_cols);
  for (Eigen::Index k = 0; k < n; ++k) {
    out += taps[static_cast<std::size_t>(k)] * horizontal.middleRows(k, out_rows);
  }
  return out;
}

}  // namespace

double mse(const Image& a, const Image& b) {
  require_same_dims(a, b);
  return (a.cast<double>() - b.cast<double>()).square().mean();
}

double psnr(const Image& a, const Image& b) {
  const double err = mse(a, b);
  if (err == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / err);
}

double ssim(const Image& a, const Image& b, const SsimParams& params) {
  require_same_dims(a, b);
  if (a.rows() < params.window || a.cols() < params.window) {
    throw DimensionError("SSIM needs images of at least " + std::to_string(params.window) +
                         " pixels per side");
  }
  const auto taps = gaussian_taps(params.window, params.sigma);
  const Plane x = to_plane(a);
  const Plane y = to_plane(b);
  const Plane mu_x = filter_valid(x, taps);
  const Plane mu_y = filter_valid(y, taps);
  const Plane var_x = filter_valid(x * x, taps) - mu_x * mu_x;
  const Plane var_y = filter_valid(y * y, taps) - mu_y * mu_y;
  const Plane cov = filter_valid(x * y, taps) - mu_x * mu_y;

  const double c1 = std::pow(params.k1 * params.dynamic_range, 2);
  const double c2 = std::pow(params.k2 * params.dynamic_range, 2);
  const Plane map = ((2.0 * mu_x * mu_y + c1) * (2.0 * cov + c2)) /
                    ((mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2));
  return map.mean();
}

QualityReport quality(const Image& a, const Image& b) { return {psnr(a, b), ssim(a, b)}; }

std::string format_db(double value, int precision) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

}  // namespace dcjpeg
