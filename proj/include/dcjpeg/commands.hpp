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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dcjpeg/dc_recover.hpp"
#include "dcjpeg/wavext.hpp"

namespace dcjpeg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInternalError = 2,
  kDimensionError = 3,
};

inline constexpr const char* kBenchHeader = "id,orig_bytes,drop_bytes,ratio,psnr_zero,psnr_rec,ssim_rec,ms";

struct BenchRow {
  std::string id;
  double orig_bytes = 0;
  double drop_bytes = 0;
  double ratio = 0;
  double psnr_zero = 0;  // zero-DC decode vs Q50 reference, dB
  double psnr_rec = 0;   // recovered vs Q50 reference, dB
  double ssim_rec = 0;
  double ms = 0;
};

/// One row per image: encode, drop DCs, recover, and compare against the standard decode.
BenchRow bench_image(const std::string& id, const Image& img, const RecoveryConfig& cfg);

/// Images (.pgm, and .png when built with PNG) in `dir`, sorted by file name.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir);

std::vector<BenchRow> run_bench(const std::vector<std::filesystem::path>& images,
                                const RecoveryConfig& cfg, int jobs);

/// min, max and ave rows over every numeric column, in that order.
std::vector<BenchRow> summary_rows(const std::vector<BenchRow>& rows);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct RecoverOptions {
  RecoveryConfig config;
  std::optional<std::filesystem::path> reference;
};

int cmd_encode(const std::filesystem::path& input, const std::filesystem::path& output, bool drop,
               std::ostream& out, std::ostream& err);
int cmd_decode(const std::filesystem::path& input, const std::filesystem::path& output,
               std::ostream& out, std::ostream& err);
int cmd_recover(const std::filesystem::path& input, const std::filesystem::path& output,
                const RecoverOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const std::filesystem::path& dir, const std::filesystem::path& report,
              const RecoveryConfig& cfg, int jobs, std::ostream& out, std::ostream& err);
int cmd_wavext(const std::filesystem::path& input, const std::filesystem::path& output,
               TensorMode mode, std::ostream& out, std::ostream& err);
int cmd_denoise(const std::filesystem::path& input, const std::filesystem::path& output,
                std::ostream& out, std::ostream& err);

}  // namespace dcjpeg::cli
