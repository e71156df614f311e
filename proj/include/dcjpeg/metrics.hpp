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

#include <limits>
#include <string>

#include "dcjpeg/image.hpp"

namespace dcjpeg {

/// PSNR of identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
};

struct QualityReport {
  double psnr = kInfinitePsnr;
  double ssim = 1.0;
};

double mse(const Image& a, const Image& b);

/// 10 log10(255^2 / MSE); kInfinitePsnr when the images are identical.
double psnr(const Image& a, const Image& b);

/// Mean of the local SSIM map over the valid region of a Gaussian window.
/// Both sides must be at least `params.window` pixels.
double ssim(const Image& a, const Image& b, const SsimParams& params = {});

QualityReport quality(const Image& a, const Image& b);

/// Decimal text for reports; the infinite PSNR prints as "inf".
std::string format_db(double value, int precision = 4);

}  // namespace dcjpeg
