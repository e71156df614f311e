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

#include <doctest.h>

#include <cmath>
#include <random>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/metrics.hpp"
#include "test_support.hpp"

using namespace dcjpeg;

namespace {

// Reference pair; expected scores computed once with scikit-image 0.2x
// (gaussian_weights=True, sigma=1.5, use_sample_covariance=False, data_range=255).
void reference_pair(Image& a, Image& b) {
  a.resize(24, 32);
  b.resize(24, 32);
  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 32; ++x) {
      const int v = (x * 7 + y * 13 + (x * y) % 17) % 256;
      a(y, x) = static_cast<std::uint8_t>(v);
      b(y, x) = clamp_to_u8(v + ((x * 31 + y * 17) % 9 - 4) * 3);
    }
  }
}

}  // namespace

TEST_CASE("PSNR closed forms") {
  const Image a = Image::Constant(20, 30, 100);
  CHECK(psnr(a, a) == kInfinitePsnr);
  CHECK(mse(a, a) == 0.0);
  const Image b = Image::Constant(20, 30, 101);
  CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-6));
  CHECK(std::abs(psnr(a, b) - 20.0 * std::log10(255.0)) < 1e-12);
  CHECK(mse(a, Image::Constant(20, 30, 90)) == 100.0);
  CHECK_THROWS_AS(psnr(a, Image::Constant(20, 31, 0)), DimensionError);
}

TEST_CASE("PSNR and SSIM against frozen reference values") {
  Image a;
  Image b;
  reference_pair(a, b);
  CHECK(psnr(a, b) == doctest::Approx(30.465339088124228).epsilon(1e-12));
  CHECK(ssim(a, b) == doctest::Approx(0.9709265834344913).epsilon(1e-9));
}

TEST_CASE("SSIM closed forms") {
  const Image c100 = Image::Constant(16, 16, 100);
  const Image c140 = Image::Constant(16, 16, 140);
  const double c1 = std::pow(0.01 * 255, 2);
  const double closed = (2.0 * 100 * 140 + c1) / (100.0 * 100 + 140.0 * 140 + c1);
  CHECK(std::abs(ssim(c100, c140) - closed) < 1e-9);
  CHECK(std::abs(ssim(c100, c140) - 0.9459578178813928) < 1e-9);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Image r = dcjpeg::testing::random_image(rng, 11 + trial, 11 + 2 * trial);
    CHECK(std::abs(ssim(r, r) - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(ssim(Image::Zero(10, 40), Image::Zero(10, 40)), DimensionError);
  CHECK_THROWS_AS(ssim(Image::Zero(12, 40), Image::Zero(12, 41)), DimensionError);
}

TEST_CASE("SSIM of an inverted high-variance image is low") {
  std::mt19937 rng(9);
  const Image a = dcjpeg::testing::random_image(rng, 32, 32);
  const Image inv = 255 - a;
  CHECK(ssim(a, inv) < 0.5);
  CHECK(ssim(a, inv) >= -1.0);
}

TEST_CASE("symmetry and monotonicity") {
  std::mt19937 rng(13);
  const Image clean = dcjpeg::testing::smooth_scene(40, 40, 6);
  const Image other = dcjpeg::testing::random_image(rng, 40, 40);
  CHECK(psnr(clean, other) == psnr(other, clean));
  CHECK(std::abs(ssim(clean, other) - ssim(other, clean)) < 1e-12);

  double previous = kInfinitePsnr;
  for (int amp : {1, 2, 4, 8}) {
    std::uniform_int_distribution<int> sign(0, 1);
    Image noisy(40, 40);
    for (Eigen::Index i = 0; i < noisy.size(); ++i) {
      const int base = 100 + static_cast<int>(i % 50);
      noisy.data()[i] = static_cast<std::uint8_t>(base + (sign(rng) ? amp : -amp));
    }
    Image ref(40, 40);
    for (Eigen::Index i = 0; i < ref.size(); ++i) ref.data()[i] = static_cast<std::uint8_t>(100 + i % 50);
    const double p = psnr(noisy, ref);
    CHECK(p < previous);
    previous = p;
  }
}

TEST_CASE("quality report and formatting") {
  const Image a = Image::Constant(12, 12, 3);
  const QualityReport same = quality(a, a);
  CHECK(same.psnr == kInfinitePsnr);
  CHECK(same.ssim == doctest::Approx(1.0));
  CHECK(format_db(kInfinitePsnr) == "inf");
  CHECK(format_db(48.13080360867909) == "48.1308");
  CHECK(format_db(1.5, 2) == "1.50");
}
