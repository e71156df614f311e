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

#include <algorithm>
#include <random>
#include <set>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/jpeg_stream.hpp"
#include "test_support.hpp"

using namespace dcjpeg;

namespace {

CoeffGrid random_grid(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> dc(-1000, 1000);
  std::uniform_int_distribution<int> ac(-1023, 1023);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> pick(0, 9);
  CoeffGrid g;
  g.block_rows = rows;
  g.block_cols = cols;
  g.width = cols * 8;
  g.height = rows * 8;
  g.quant = q50();
  g.blocks.resize(static_cast<std::size_t>(rows) * cols);
  for (CoeffBlock& b : g.blocks) {
    b.setZero();
    b(0, 0) = dc(rng);
    for (int i = 1; i < 64; ++i) {
      const int k = pick(rng);
      if (k == 0) b.data()[i] = ac(rng);
      else if (k < 4) b.data()[i] = small(rng);
    }
  }
  return g;
}

std::vector<std::uint8_t> flat_stream() {
  return encode_baseline(image_to_coeff_grid(Image::Constant(16, 16, 200))).bytes;
}

}  // namespace

TEST_CASE("zigzag table is a permutation with the standard opening") {
  std::set<int> seen(kZigzagToNatural.begin(), kZigzagToNatural.end());
  CHECK(seen.size() == 64);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 63);
  CHECK(kZigzagToNatural[0] == 0);
  CHECK(kZigzagToNatural[1] == 1);
  CHECK(kZigzagToNatural[2] == 8);
  CHECK(kZigzagToNatural[3] == 16);
  CHECK(kZigzagToNatural[4] == 9);
  CHECK(kZigzagToNatural[63] == 63);
}

TEST_CASE("entropy codec round trip on random grids") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> side(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const CoeffGrid g = random_grid(rng, side(rng), side(rng));
    const EncodedJpeg enc = encode_baseline(g);
    REQUIRE(enc.bytes.size() >= 4);
    CHECK(enc.bytes[0] == 0xFF);
    CHECK(enc.bytes[1] == 0xD8);
    CHECK(enc.bytes[enc.bytes.size() - 2] == 0xFF);
    CHECK(enc.bytes.back() == 0xD9);
    CHECK(enc.scan_len <= enc.total_len());
    REQUIRE(decode_baseline(enc.bytes) == g);
  }
}

TEST_CASE("round trip keeps the unpadded frame size") {
  const CoeffGrid g = image_to_coeff_grid_padded(dcjpeg::testing::smooth_scene(13, 21, 2));
  const CoeffGrid back = decode_baseline(encode_baseline(g).bytes);
  CHECK(back.width == 21);
  CHECK(back.height == 13);
  CHECK(back == g);
}

TEST_CASE("flat 16x16 image scan bytes") {
  const EncodedJpeg enc = encode_baseline(image_to_coeff_grid(Image::Constant(16, 16, 200)));
  // DC 36 (category 6, code 1110 + 100100) + EOB, then three zero diffs (00) + EOB (1010).
  REQUIRE(enc.scan_len == 4);
  const std::size_t start = enc.bytes.size() - 2 - enc.scan_len;
  CHECK(enc.bytes[start] == 0xE9);
  CHECK(enc.bytes[start + 1] == 0x28);
  CHECK(enc.bytes[start + 2] == 0xA2);
  CHECK(enc.bytes[start + 3] == 0x8A);
  CHECK(enc.scan_len < 4 * 4);
}

TEST_CASE("parse_encoded recovers the scan length") {
  std::mt19937 rng(4);
  const EncodedJpeg enc = encode_baseline(random_grid(rng, 3, 5));
  const EncodedJpeg parsed = parse_encoded(enc.bytes);
  CHECK(parsed.scan_len == enc.scan_len);
  CHECK(parsed.bytes == enc.bytes);
}

TEST_CASE("decoder errors") {
  auto bytes = flat_stream();
  SUBCASE("corrupted SOI") {
    bytes[1] = 0x00;
    CHECK_THROWS_AS(decode_baseline(bytes), ParseError);
  }
  SUBCASE("truncated scan") {
    bytes.resize(bytes.size() - 4);
    CHECK_THROWS_AS(decode_baseline(bytes), TruncationError);
  }
  SUBCASE("truncated header") {
    bytes.resize(30);
    CHECK_THROWS_AS(decode_baseline(bytes), TruncationError);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(decode_baseline(std::vector<std::uint8_t>{}), ParseError);
  }
}

TEST_CASE("invalid Huffman code") {
  // All-ones is never a complete code in the Annex-K DC table prefix used here.
  auto bytes = flat_stream();
  const EncodedJpeg enc = parse_encoded(bytes);
  const std::size_t start = bytes.size() - 2 - enc.scan_len;
  bytes[start] = 0xFF;
  bytes.insert(bytes.begin() + static_cast<long>(start) + 1, 0x00);  // keep it stuffed
  bytes[start + 2] = 0xFF;
  bytes.insert(bytes.begin() + static_cast<long>(start) + 3, 0x00);
  CHECK_THROWS_AS(decode_baseline(bytes), HuffmanError);
}

TEST_CASE("capacity limits") {
  CoeffGrid g = image_to_coeff_grid(Image::Constant(8, 16, 0));
  g.at(0, 1)(0, 1) = 1024;
  CHECK_THROWS_AS(encode_baseline(g), CapacityError);
  g.at(0, 1)(0, 1) = 0;
  g.at(0, 0)(0, 0) = -2000;
  g.at(0, 1)(0, 0) = 2000;
  CHECK_THROWS_AS(encode_baseline(g), CapacityError);
  g.at(0, 1)(0, 0) = 0;
  g.quant.divisors(3, 3) = 256;
  CHECK_THROWS_AS(encode_baseline(g), CapacityError);
}

TEST_CASE("drop_dc zeroes all but the corners") {
  std::mt19937 rng(8);
  const CoeffGrid g = random_grid(rng, 32, 32);
  const CoeffGrid d = drop_dc(g);
  int dropped = 0;
  for (int r = 0; r < 32; ++r) {
    for (int c = 0; c < 32; ++c) {
      CoeffBlock a = g.at(r, c);
      CoeffBlock b = d.at(r, c);
      const bool corner = (r == 0 || r == 31) && (c == 0 || c == 31);
      if (!corner) {
        REQUIRE(b(0, 0) == 0);
        ++dropped;
      } else {
        REQUIRE(b(0, 0) == a(0, 0));
      }
      a(0, 0) = b(0, 0) = 0;
      REQUIRE(a == b);  // ACs untouched
    }
  }
  CHECK(dropped == 1020);
  CHECK(extract_corner_dcs(d) == extract_corner_dcs(g));
  CHECK(drop_dc(d) == d);
}

TEST_CASE("drop_dc changes exactly rows*cols - distinct corners entries") {
  std::mt19937 rng(21);
  for (int rows = 1; rows <= 4; ++rows) {
    for (int cols = 1; cols <= 4; ++cols) {
      CoeffGrid g = random_grid(rng, rows, cols);
      for (CoeffBlock& b : g.blocks) b(0, 0) = 5;
      const CoeffGrid d = drop_dc(g);
      int changed = 0;
      for (std::size_t n = 0; n < g.blocks.size(); ++n) changed += g.blocks[n](0, 0) != d.blocks[n](0, 0);
      const int corners = (rows == 1 ? 1 : 2) * (cols == 1 ? 1 : 2);
      CHECK(changed == rows * cols - corners);
    }
  }
}

TEST_CASE("corner DCs") {
  const CoeffGrid flat = image_to_coeff_grid(Image::Constant(16, 24, 200));
  CHECK(extract_corner_dcs(flat) == CornerDcs{36, 36, 36, 36});

  CoeffGrid single = image_to_coeff_grid(Image::Constant(8, 8, 0));
  single.at(0, 0)(0, 0) = -7;
  CHECK(extract_corner_dcs(single) == CornerDcs{-7, -7, -7, -7});
  CHECK(drop_dc(single) == single);

  CoeffGrid g = image_to_coeff_grid(Image::Constant(24, 32, 128));
  g.at(0, 0)(0, 0) = 1;
  g.at(0, 3)(0, 0) = 2;
  g.at(2, 0)(0, 0) = 3;
  g.at(2, 3)(0, 0) = 4;
  CHECK(extract_corner_dcs(g) == CornerDcs{1, 2, 3, 4});
  CoeffGrid zeroed = g;
  for (CoeffBlock& b : zeroed.blocks) b(0, 0) = 0;
  CHECK(extract_corner_dcs(zeroed) == CornerDcs{});
}

TEST_CASE("compression ratio") {
  // Mid-gray: every DC is already zero, so nothing changes.
  const CoeffGrid mid = image_to_coeff_grid(Image::Constant(64, 64, 128));
  const auto r_mid = compression_ratio(encode_baseline(mid), encode_baseline(drop_dc(mid)));
  CHECK(r_mid.total == 1.0);
  CHECK(r_mid.scan == 1.0);

  // Other flat levels: the kept corners add DC jumps, so the file can grow slightly.
  const CoeffGrid flat = image_to_coeff_grid(Image::Constant(64, 64, 200));
  const auto r_flat = compression_ratio(encode_baseline(flat), encode_baseline(drop_dc(flat)));
  CHECK(r_flat.total == doctest::Approx(1.0).epsilon(0.02));
  CHECK(r_flat.total > 1.0);

  for (const auto& path : dcjpeg::testing::photo_paths()) {
    const CoeffGrid g = image_to_coeff_grid_padded(load_image(path));
    const EncodedJpeg a = encode_baseline(g);
    const EncodedJpeg b = encode_baseline(drop_dc(g));
    CHECK(b.total_len() <= a.total_len());
    const CompressionRatio r = compression_ratio(a, b);
    CHECK(r.total > 0.0);
    CHECK(r.total <= 1.0);
    CHECK(r.scan <= 1.0);
    CHECK(r.scan < r.total);  // headers are identical, so the scan ratio is smaller
  }
}

TEST_CASE("file round trip") {
  dcjpeg::testing::TempDir dir;
  const EncodedJpeg enc = encode_baseline(image_to_coeff_grid(dcjpeg::testing::smooth_scene(32, 40, 3)));
  write_jpeg(enc, dir / "a.jpg");
  const EncodedJpeg back = read_jpeg(dir / "a.jpg");
  CHECK(back.bytes == enc.bytes);
  CHECK(back.scan_len == enc.scan_len);
  CHECK_THROWS_AS(read_jpeg(dir / "none.jpg"), IoError);
}
