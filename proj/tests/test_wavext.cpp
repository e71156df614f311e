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
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/npy.hpp"
#include "dcjpeg/wavext.hpp"
#include "test_support.hpp"

using namespace dcjpeg;
using dcjpeg::testing::TempDir;

namespace {

RgbImage gray_rgb(const Image& g) { return RgbImage{{g, g, g}}; }

RgbImage random_rgb(std::mt19937& rng, Eigen::Index n) {
  return RgbImage{{dcjpeg::testing::smooth_scene(n, n, rng()), dcjpeg::testing::smooth_scene(n, n, rng()),
                   dcjpeg::testing::random_image(rng, n, n)}};
}

}  // namespace

TEST_CASE("cubic kernel") {
  CHECK(cubic_kernel(0.0) == 1.0);
  CHECK(cubic_kernel(1.0) == 0.0);
  CHECK(cubic_kernel(2.0) == 0.0);
  CHECK(cubic_kernel(-1.5) == cubic_kernel(1.5));
  CHECK(cubic_kernel(0.5) == doctest::Approx(0.5625));
  CHECK(cubic_kernel(1.5) == doctest::Approx(-0.0625));
  for (double f = 0.0; f < 1.0; f += 0.125) {
    const double sum = cubic_kernel(f + 1) + cubic_kernel(f) + cubic_kernel(f - 1) + cubic_kernel(f - 2);
    CHECK(sum == doctest::Approx(1.0));
  }
}

TEST_CASE("bicubic resize") {
  const Plane c = Plane::Constant(8, 8, 42.0);
  CHECK((resize_bicubic(c, 16, 16) - 42.0).cwiseAbs().maxCoeff() < 1e-12);
  std::mt19937 rng(2);
  Plane p(9, 7);
  for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = static_cast<double>(rng() % 200);
  CHECK((resize_bicubic(p, 9, 7) - p).cwiseAbs().maxCoeff() < 1e-12);  // identity scale
  const Plane up = resize_bicubic(p, 18, 21);
  CHECK(up.rows() == 18);
  CHECK(up.cols() == 21);
  CHECK_THROWS_AS(resize_bicubic(Plane(), 4, 4), DimensionError);
}

TEST_CASE("crop offset") {
  CHECK(extension_crop_offset(19, 16) == 2);  // drop 2 leading, 1 trailing
  CHECK(extension_crop_offset(11, 8) == 2);
  CHECK(extension_crop_offset(131, 128) == 2);
  for (int n = 16; n <= 256; n += 2) {
    const Eigen::Index s = (n + 7) / 2;
    const Eigen::Index off = extension_crop_offset(s, n / 2);
    REQUIRE(off >= 0);
    REQUIRE(off + n / 2 <= s);
    REQUIRE(off >= s - n / 2 - off);  // leading-heavy
  }
}

TEST_CASE("wavelet_extension") {
  CHECK((wavelet_extension(Plane::Constant(32, 32, 90.0)).array() == 0.0).all());
  const Plane natural = to_plane(dcjpeg::testing::smooth_scene(32, 32, 8));
  const Plane ext = wavelet_extension(natural);
  CHECK(ext.rows() == 32);
  CHECK(ext.minCoeff() >= 0.0);
  CHECK(ext.maxCoeff() <= 255.0);
  CHECK(ext.maxCoeff() > 200.0);
  CHECK((wavelet_extension(natural).array() == ext.array()).all());
  CHECK_THROWS_AS(wavelet_extension(Plane::Zero(14, 14)), SizeError);
  CHECK_THROWS_AS(wavelet_extension(Plane::Zero(17, 17)), SizeError);
  CHECK_THROWS_AS(wavelet_extension(Plane::Zero(16, 18)), SizeError);

  // Adding a constant leaves the extension unchanged.
  const Image base = dcjpeg::testing::smooth_scene(32, 32, 9).cwiseMin(200);
  const Image shifted = (base.cast<int>() + 40).cast<std::uint8_t>();
  CHECK((wavelet_extension(to_plane(base)) - wavelet_extension(to_plane(shifted))).cwiseAbs().maxCoeff() <
        1e-9);
}

TEST_CASE("tensor shape law and train-mode fidelity") {
  std::mt19937 rng(5);
  for (int n = 16; n <= 256; n += 30) {
    const RgbImage img = random_rgb(rng, n);
    const ExtendedTensor t = build_training_tensor(img);
    REQUIRE(t.size() == n);
    REQUIRE(t.mode == TensorMode::Train);
    for (const Plane& c : t.channels) {
      REQUIRE(c.rows() == n);
      REQUIRE(c.cols() == n);
      REQUIRE(c.minCoeff() >= 0.0);
      REQUIRE(c.maxCoeff() <= 1.0);
    }
    for (int c = 0; c < 3; ++c) {
      const Image back = (t.channels[c] * 255.0).round().cast<std::uint8_t>();
      REQUIRE((back == img.channels[c]).all());
    }
    REQUIRE(t.interleaved().size() == static_cast<std::size_t>(n * n * 6));
  }
  CHECK_THROWS_AS(build_training_tensor(gray_rgb(Image::Zero(15, 15))), SizeError);
}

TEST_CASE("grayscale replicated to three channels") {
  const ExtendedTensor t = build_training_tensor(gray_rgb(dcjpeg::testing::smooth_scene(32, 32, 4)));
  CHECK((t.channels[3] == t.channels[4]).all());
  CHECK((t.channels[4] == t.channels[5]).all());
}

TEST_CASE("train versus inference") {
  const RgbImage flat = gray_rgb(Image::Constant(32, 32, 120));
  const ExtendedTensor a = build_training_tensor(flat);
  const ExtendedTensor b = build_inference_tensor(flat);
  for (int c = 0; c < 6; ++c) CHECK((a.channels[c] == b.channels[c]).all());
  CHECK(b.mode == TensorMode::Inference);

  std::mt19937 rng(6);
  std::normal_distribution<double> noise(0.0, 15.0);
  Image noisy = dcjpeg::testing::smooth_scene(64, 64, 3);
  for (Eigen::Index i = 0; i < noisy.size(); ++i) noisy.data()[i] = clamp_to_u8(noisy.data()[i] + noise(rng));
  const ExtendedTensor tr = build_tensor(gray_rgb(noisy), TensorMode::Train);
  const ExtendedTensor inf = build_tensor(gray_rgb(noisy), TensorMode::Inference);
  CHECK(!(tr.channels[0] == inf.channels[0]).all());
  for (int c = 3; c < 6; ++c) CHECK((tr.channels[c] == inf.channels[c]).all());

  CHECK(parse_tensor_mode("train") == TensorMode::Train);
  CHECK(parse_tensor_mode("inference") == TensorMode::Inference);
  CHECK_THROWS_AS(parse_tensor_mode("test"), std::invalid_argument);
}

TEST_CASE("NPY header layout") {
  const std::array<std::size_t, 3> shape = {32, 32, 6};
  CHECK(npy::header_dict(shape) == "{'descr': '<f4', 'fortran_order': False, 'shape': (32, 32, 6), }");
  const std::array<std::size_t, 1> vec = {5};
  CHECK(npy::header_dict(vec) == "{'descr': '<f4', 'fortran_order': False, 'shape': (5,), }");

  const std::vector<float> values(32 * 32 * 6, 0.25f);
  const auto bytes = npy::encode(shape, values);
  CHECK(std::string(bytes.begin(), bytes.begin() + 6) == "\x93NUMPY");
  CHECK(bytes[6] == 1);
  CHECK(bytes[7] == 0);
  const std::size_t header_len = bytes[8] | (bytes[9] << 8);
  CHECK((10 + header_len) % 64 == 0);
  CHECK(bytes[10 + header_len - 1] == '\n');
  CHECK(bytes.size() == 10 + header_len + values.size() * 4);
  CHECK_THROWS_AS(npy::encode(shape, std::vector<float>(3)), DimensionError);
}

TEST_CASE("NPY round trip and rejection") {
  std::mt19937 rng(7);
  const ExtendedTensor t = build_training_tensor(random_rgb(rng, 32));
  TempDir dir;
  export_tensor(t, dir / "t.npy");
  const npy::Array a = npy::load(dir / "t.npy");
  CHECK(a.shape == std::vector<std::size_t>{32, 32, 6});
  CHECK(a.values == t.interleaved());
  CHECK(a.values[6 * 33 + 4] == static_cast<float>(t.channels[4](1, 1)));

  std::vector<std::uint8_t> bad = npy::encode(std::array<std::size_t, 1>{2}, std::vector<float>{1, 2});
  bad[0] = 'X';
  CHECK_THROWS_AS(npy::decode(bad), FormatError);
  CHECK_THROWS_AS(npy::load(dir / "missing.npy"), IoError);
}

TEST_CASE("NPY file readable by numpy when available") {
  if (std::system("python3 -c 'import numpy' >/dev/null 2>&1") != 0) return;
  TempDir dir;
  const std::array<std::size_t, 3> shape = {2, 3, 6};
  std::vector<float> values(36);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<float>(i) / 4;
  npy::save(dir / "x.npy", shape, values);
  const std::string cmd = "python3 -c \"import numpy as n; a=n.load('" + (dir / "x.npy").string() +
                          "'); assert a.shape==(2,3,6) and a.dtype=='<f4' and a[1,2,5]==35/4\"";
  CHECK(std::system(cmd.c_str()) == 0);
}
