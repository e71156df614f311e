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

#include "dcjpeg/npy.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <regex>

#include "dcjpeg/errors.hpp"

namespace dcjpeg::npy {

namespace {

constexpr char kMagic[] = "\x93NUMPY";
constexpr std::size_t kMagicLen = 6;
constexpr std::size_t kPreamble = kMagicLen + 2 + 2;  // magic, version, header length
constexpr std::size_t kAlign = 64;

static_assert(std::endian::native == std::endian::little, "float32 payload is written natively");

std::size_t element_count(std::span<const std::size_t> shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

std::string header_dict(std::span<const std::size_t> shape) {
  std::string dims;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) dims += ", ";
    dims += std::to_string(shape[i]);
  }
  if (shape.size() == 1) dims += ",";
  return "{'descr': '<f4', 'fortran_order': False, 'shape': (" + dims + "), }";
}

std::vector<std::uint8_t> encode(std::span<const std::size_t> shape, std::span<const float> values) {
  if (element_count(shape) != values.size()) throw DimensionError("NPY shape does not match data");
  std::string header = header_dict(shape);
  const std::size_t unpadded = kPreamble + header.size() + 1;
  header.append((kAlign - unpadded % kAlign) % kAlign, ' ');
  header.push_back('\n');
  if (header.size() > 0xFFFF) throw DimensionError("NPY header too long for version 1.0");

  std::vector<std::uint8_t> out(kMagic, kMagic + kMagicLen);
  out.push_back(1);
  out.push_back(0);
  out.push_back(static_cast<std::uint8_t>(header.size() & 0xFF));
  out.push_back(static_cast<std::uint8_t>(header.size() >> 8));
  out.insert(out.end(), header.begin(), header.end());
  const auto* raw = reinterpret_cast<const std::uint8_t*>(values.data());
  out.insert(out.end(), raw, raw + values.size_bytes());
  return out;
}

Array decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPreamble || std::memcmp(bytes.data(), kMagic, kMagicLen) != 0) {
    throw FormatError("not an NPY file");
  }
  if (bytes[6] != 1) throw FormatError("only NPY version 1.x is supported");
  const std::size_t header_len = bytes[8] | (static_cast<std::size_t>(bytes[9]) << 8);
  if (bytes.size() < kPreamble + header_len) throw FormatError("NPY header truncated");
  const std::string header(reinterpret_cast<const char*>(bytes.data()) + kPreamble, header_len);

  if (header.find("'descr': '<f4'") == std::string::npos) throw FormatError("NPY dtype is not <f4");
  if (header.find("'fortran_order': False") == std::string::npos) {
    throw FormatError("Fortran-ordered NPY is not supported");
  }
  std::smatch match;
  if (!std::regex_search(header, match, std::regex(R"('shape':\s*\(([0-9,\s]*)\))"))) {
    throw FormatError("NPY header has no shape");
  }
  Array out;
  const std::string dims = match[1];
  const std::regex number(R"([0-9]+)");
  for (auto it = std::sregex_iterator(dims.begin(), dims.end(), number); it != std::sregex_iterator(); ++it) {
    out.shape.push_back(std::stoul(it->str()));
  }
  const std::size_t count = element_count(out.shape);
  const std::size_t offset = kPreamble + header_len;
  if (bytes.size() < offset + count * sizeof(float)) throw FormatError("NPY data truncated");
  out.values.resize(count);
  std::memcpy(out.values.data(), bytes.data() + offset, count * sizeof(float));
  return out;
}

void save(const std::filesystem::path& path, std::span<const std::size_t> shape,
          std::span<const float> values) {
  const auto bytes = encode(shape, values);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Array load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode(bytes);
}

}  // namespace dcjpeg::npy
