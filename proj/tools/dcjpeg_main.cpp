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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dcjpeg/commands.hpp"

using namespace dcjpeg;

int main(int argc, char** argv) {
  CLI::App app{"JPEG coding with dropped DC coefficients, DC recovery and wavelet preprocessing"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* encode = app.add_subcommand("encode", "Encode an image as baseline JPEG");
  bool drop = false;
  encode->add_option("input", input, "PGM or PNG image")->required();
  encode->add_option("output", output, "JPEG file to write")->required();
  encode->add_flag("--drop-dc", drop, "Zero every DC except the four corner blocks");

  auto* decode = app.add_subcommand("decode", "Standard decode of a baseline JPEG");
  decode->add_option("input", input, "JPEG file")->required();
  decode->add_option("output", output, "PGM or PNG image to write")->required();

  auto* recover = app.add_subcommand("recover", "Recover the missing DCs of a dropped-DC JPEG");
  std::string mode = "avg4";
  std::string loss = "mse";
  std::string seed = "top-left";
  std::string reference;
  recover->add_option("input", input, "Dropped-DC JPEG file")->required();
  recover->add_option("output", output, "PGM or PNG image to write")->required();
  recover->add_option("--mode", mode, "single | avg4")->check(CLI::IsMember({"single", "avg4"}));
  recover->add_option("--loss", loss, "mse | trend | both")->check(CLI::IsMember({"mse", "trend", "both"}));
  const std::map<std::string, Corner> corners = {{"top-left", Corner::TopLeft},
                                                 {"top-right", Corner::TopRight},
                                                 {"bottom-left", Corner::BottomLeft},
                                                 {"bottom-right", Corner::BottomRight}};
  recover->add_option("--seed", seed, "Starting corner in single mode")
      ->check(CLI::IsMember({"top-left", "top-right", "bottom-left", "bottom-right"}));
  recover->add_option("--reference", reference, "Image to report PSNR/SSIM against");

  auto* bench = app.add_subcommand("bench", "Compression and recovery report over a directory");
  std::string report;
  int jobs = 1;
  bench->add_option("dir", input, "Directory of PGM/PNG images")->required();
  bench->add_option("report", report, "CSV file to write")->required();
  bench->add_option("--jobs", jobs, "Images processed in parallel")->check(CLI::PositiveNumber);
  bench->add_option("--mode", mode, "single | avg4")->check(CLI::IsMember({"single", "avg4"}));
  bench->add_option("--loss", loss, "mse | trend | both")->check(CLI::IsMember({"mse", "trend", "both"}));

  auto* wavext = app.add_subcommand("wavext", "Export the 6-channel wavelet-extended tensor as NPY");
  std::string tensor_mode = "train";
  wavext->add_option("input", input, "N x N image, N even >= 16")->required();
  wavext->add_option("output", output, "NPY file to write")->required();
  wavext->add_option("--mode", tensor_mode, "train | inference")
      ->check(CLI::IsMember({"train", "inference"}));

  auto* denoise = app.add_subcommand("denoise", "BayesShrink wavelet denoising");
  denoise->add_option("input", input, "PGM or PNG image")->required();
  denoise->add_option("output", output, "Image to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  RecoveryConfig cfg;
  cfg.scan = parse_scan_mode(mode);
  cfg.loss = parse_loss(loss);
  cfg.seed = corners.at(seed);

  if (encode->parsed()) return cli::cmd_encode(input, output, drop, std::cout, std::cerr);
  if (decode->parsed()) return cli::cmd_decode(input, output, std::cout, std::cerr);
  if (recover->parsed()) {
    cli::RecoverOptions options{cfg, std::nullopt};
    if (!reference.empty()) options.reference = reference;
    return cli::cmd_recover(input, output, options, std::cout, std::cerr);
  }
  if (bench->parsed()) return cli::cmd_bench(input, report, cfg, jobs, std::cout, std::cerr);
  if (wavext->parsed()) {
    return cli::cmd_wavext(input, output, parse_tensor_mode(tensor_mode), std::cout, std::cerr);
  }
  if (denoise->parsed()) return cli::cmd_denoise(input, output, std::cout, std::cerr);
  return cli::kInternalError;
}
