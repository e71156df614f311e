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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dcjpeg::npy {

/// Little-endian float32 array in C order.
struct Array {
  std::vector<std::size_t> shape;
  std::vector<float> values;
};

/// Header dict text, e.g. "{'descr': '<f4', 'fortran_order': False, 'shape': (32, 32, 6), }".
std::string header_dict(std::span<const std::size_t> shape);

/// Version 1.0 file image: magic, version, header length, space-padded dict ending in '\n'
/// so that the data starts at a multiple of 64 bytes.
std::vector<std::uint8_t> encode(std::span<const std::size_t> shape, std::span<const float> values);
Array decode(std::span<const std::uint8_t> bytes);

void save(const std::filesystem::path& path, std::span<const std::size_t> shape,
          std::span<const float> values);
Array load(const std::filesystem::path& path);

}  // namespace dcjpeg::npy
