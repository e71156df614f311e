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

#include "dcjpeg/wavext.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/npy.hpp"

namespace dcjpeg {

namespace {

void require_extendable(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || rows % 2 != 0 || rows < 16) {
    throw SizeError("wavelet extension needs an N x N input with even N >= 16, got " +
                    std::to_string(cols) + "x" + std::to_string(rows));
  }
}

// Interpolates one axis; `taps(i)` reads source sample i (clamped by caller).
struct AxisWeights {
  std::vector<std::array<Eigen::Index, 4>> index;
  std::vector<std::array<double, 4>> weight;
};

AxisWeights axis_weights(Eigen::Index src, Eigen::Index dst) {
  AxisWeights w;
  w.index.resize(static_cast<std::size_t>(dst));
  w.weight.resize(static_cast<std::size_t>(dst));
  const double scale = static_cast<double>(src) / static_cast<double>(dst);
  for (Eigen::Index o = 0; o < dst; ++o) {
    const double pos = (static_cast<double>(o) + 0.5) * scale - 0.5;
    const double base = std::floor(pos);
    const double frac = pos - base;
    for (int k = 0; k < 4; ++k) {
      const auto i = static_cast<Eigen::Index>(base) + k - 1;
      w.index[static_cast<std::size_t>(o)][k] = std::clamp<Eigen::Index>(i, 0, src - 1);
      w.weight[static_cast<std::size_t>(o)][k] = cubic_kernel(frac - (k - 1));
    }
  }
  return w;
}

}  // namespace

double cubic_kernel(double x, double a) {
  x = std::abs(x);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

Plane resize_bicubic(const Plane& src, Eigen::Index rows, Eigen::Index cols) {
  if (src.size() == 0 || rows <= 0 || cols <= 0) throw DimensionError("empty resize");
  const AxisWeights wx = axis_weights(src.cols(), cols);
  const AxisWeights wy = axis_weights(src.rows(), rows);
  Plane horizontal(src.rows(), cols);
  for (Eigen::Index x = 0; x < cols; ++x) {
    const auto& idx = wx.index[static_cast<std::size_t>(x)];
    const auto& wt = wx.weight[static_cast<std::size_t>(x)];
    horizontal.col(x) = wt[0] * src.col(idx[0]) + wt[1] * src.col(idx[1]) +
                        wt[2] * src.col(idx[2]) + wt[3] * src.col(idx[3]);
  }
  Plane out(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    const auto& idx = wy.index[static_cast<std::size_t>(y)];
    const auto& wt = wy.weight[static_cast<std::size_t>(y)];
    out.row(y) = wt[0] * horizontal.row(idx[0]) + wt[1] * horizontal.row(idx[1]) +
                 wt[2] * horizontal.row(idx[2]) + wt[3] * horizontal.row(idx[3]);
  }
  return out;
}

Plane wavelet_extension(const Plane& channel) {
  require_extendable(channel.rows(), channel.cols());
  const Eigen::Index n = channel.rows();
  const Eigen::Index half = n / 2;
  const Subbands sb = dwt2(channel, db4());
  const Eigen::Index offset = extension_crop_offset(sb.ll.rows(), half);
  Plane ll = sb.ll.block(offset, offset, half, half);

  const double lo = ll.minCoeff();
  const double hi = ll.maxCoeff();
  // A flat band carries no structure; it maps to zero.
  ll = hi > lo ? Plane((ll - lo) * (255.0 / (hi - lo))) : Plane(Plane::Zero(half, half));

  return resize_bicubic(ll, n, n).cwiseMax(0.0).cwiseMin(255.0);
}

TensorMode parse_tensor_mode(std::string_view name) {
  if (name == "train") return TensorMode::Train;
  if (name == "inference") return TensorMode::Inference;
  throw std::invalid_argument("unknown tensor mode '" + std::string(name) + "' (train|inference)");
}

std::vector<float> ExtendedTensor::interleaved() const {
  const Eigen::Index n = size();
  std::vector<float> out(static_cast<std::size_t>(n * n * 6));
  std::size_t k = 0;
  for (Eigen::Index y = 0; y < n; ++y) {
    for (Eigen::Index x = 0; x < n; ++x) {
      for (const Plane& c : channels) out[k++] = static_cast<float>(c(y, x));
    }
  }
  return out;
}

ExtendedTensor build_tensor(const RgbImage& img, TensorMode mode) {
  require_extendable(img.rows(), img.cols());
  ExtendedTensor t;
  t.mode = mode;
  for (int c = 0; c < 3; ++c) {
    const Plane original = to_plane(img.channels[c]);
    t.channels[3 + c] = wavelet_extension(original) / 255.0;
    const Image base = mode == TensorMode::Train ? img.channels[c] : wd_denoise(img.channels[c]);
    t.channels[c] = to_plane(base) / 255.0;
  }
  return t;
}

ExtendedTensor build_training_tensor(const RgbImage& img) { return build_tensor(img, TensorMode::Train); }

ExtendedTensor build_inference_tensor(const RgbImage& img) {
  return build_tensor(img, TensorMode::Inference);
}

void export_tensor(const ExtendedTensor& tensor, const std::filesystem::path& path) {
  const auto n = static_cast<std::size_t>(tensor.size());
  const std::array<std::size_t, 3> shape = {n, n, 6};
  const std::vector<float> values = tensor.interleaved();
  npy::save(path, shape, values);
}

}  // namespace dcjpeg
