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
#include <filesystem>
#include <string_view>

#include "dcjpeg/image.hpp"
#include "dcjpeg/wavelet.hpp"

namespace dcjpeg {

/// Catmull-Rom bicubic resampling (a = -0.5) with pixel centres at half-integer positions
/// and edge replication outside the source.
Plane resize_bicubic(const Plane& src, Eigen::Index rows, Eigen::Index cols);

/// Cubic convolution weight for a tap at distance `x`.
double cubic_kernel(double x, double a = -0.5);

/// Low-frequency structure of one N x N channel, in [0, 255]:
/// level-1 db4 LL, cropped to N/2 x N/2, min-max stretched, bicubic upsampled back to N x N.
Plane wavelet_extension(const Plane& channel);

/// Leading rows/cols dropped when cropping an `ll_size` LL band to `target`.
inline Eigen::Index extension_crop_offset(Eigen::Index ll_size, Eigen::Index target) {
  return (ll_size - target + 1) / 2;
}

enum class TensorMode { Train, Inference };
TensorMode parse_tensor_mode(std::string_view name);  // "train" | "inference"

/// N x N x 6 values in [0, 1]: three base channels, then three wavelet-extension channels.
struct ExtendedTensor {
  std::array<Plane, 6> channels;
  TensorMode mode = TensorMode::Train;

  Eigen::Index size() const { return channels[0].rows(); }
  /// Interleaved (row, col, channel) float32 values, C order.
  std::vector<float> interleaved() const;
};

/// Base channels are the input scaled by 1/255.
ExtendedTensor build_training_tensor(const RgbImage& img);

/// Base channels are the BayesShrink-denoised input; the extension channels come from the
/// original input, exactly as in training.
ExtendedTensor build_inference_tensor(const RgbImage& img);

ExtendedTensor build_tensor(const RgbImage& img, TensorMode mode);

/// NPY v1.0, dtype <f4, shape (N, N, 6).
void export_tensor(const ExtendedTensor& tensor, const std::filesystem::path& path);

}  // namespace dcjpeg
