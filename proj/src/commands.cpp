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

#include "dcjpeg/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/metrics.hpp"

namespace dcjpeg::cli {

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

std::string fixed(double v, int precision) {
  if (std::isnan(v)) return "nan";
  return format_db(v, precision);
}

void write_row(std::ostream& out, const BenchRow& r) {
  out << r.id << ',' << fixed(r.orig_bytes, r.orig_bytes == std::floor(r.orig_bytes) ? 0 : 2) << ','
      << fixed(r.drop_bytes, r.drop_bytes == std::floor(r.drop_bytes) ? 0 : 2) << ','
      << fixed(r.ratio, 6) << ',' << fixed(r.psnr_zero, 4) << ',' << fixed(r.psnr_rec, 4) << ','
      << fixed(r.ssim_rec, 6) << ',' << fixed(r.ms, 3) << '\n';
}

}  // namespace

BenchRow bench_image(const std::string& id, const Image& img, const RecoveryConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const CoeffGrid grid = image_to_coeff_grid_padded(img);
  const EncodedJpeg original = encode_baseline(grid);
  const EncodedJpeg dropped = encode_baseline(drop_dc(grid));

  const Image reference = coeff_grid_to_image(grid);
  const Image zero_dc = coeff_grid_to_image(decode_baseline(dropped.bytes));
  const Image recovered = recover_image(dropped, cfg);
  const auto stop = std::chrono::steady_clock::now();

  BenchRow row;
  row.id = id;
  row.orig_bytes = static_cast<double>(original.total_len());
  row.drop_bytes = static_cast<double>(dropped.total_len());
  row.ratio = compression_ratio(original, dropped).total;
  row.psnr_zero = psnr(zero_dc, reference);
  row.psnr_rec = psnr(recovered, reference);
  const bool ssim_ok = reference.rows() >= 11 && reference.cols() >= 11;
  row.ssim_rec = ssim_ok ? ssim(recovered, reference) : std::numeric_limits<double>::quiet_NaN();
  row.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".pgm" || (ext == ".png" && png_supported())) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<std::filesystem::path>& images,
                                const RecoveryConfig& cfg, int jobs) {
  std::vector<BenchRow> rows(images.size());
  std::vector<std::exception_ptr> failures(images.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < images.size(); i = next++) {
      try {
        rows[i] = bench_image(images[i].stem().string(), load_image(images[i]), cfg);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(images.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

std::vector<BenchRow> summary_rows(const std::vector<BenchRow>& rows) {
  if (rows.empty()) return {};
  BenchRow lo = rows.front();
  BenchRow hi = rows.front();
  BenchRow sum;
  lo.id = "min";
  hi.id = "max";
  sum.id = "ave";
  const auto fields = {&BenchRow::orig_bytes, &BenchRow::drop_bytes, &BenchRow::ratio,
                       &BenchRow::psnr_zero,  &BenchRow::psnr_rec,   &BenchRow::ssim_rec,
                       &BenchRow::ms};
  for (const BenchRow& r : rows) {
    for (auto field : fields) {
      lo.*field = std::min(lo.*field, r.*field);
      hi.*field = std::max(hi.*field, r.*field);
      sum.*field += r.*field;
    }
  }
  for (auto field : fields) sum.*field /= static_cast<double>(rows.size());
  return {lo, hi, sum};
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const BenchRow& r : rows) write_row(out, r);
  for (const BenchRow& r : summary_rows(rows)) write_row(out, r);
}

int cmd_encode(const std::filesystem::path& input, const std::filesystem::path& output, bool drop,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Image img = load_image(input);
    const CoeffGrid grid = image_to_coeff_grid_padded(img);
    const EncodedJpeg original = encode_baseline(grid);
    if (!drop) {
      write_jpeg(original, output);
      out << "bytes=" << original.total_len() << " scan_bytes=" << original.scan_len << '\n';
      return static_cast<int>(kOk);
    }
    const EncodedJpeg dropped = encode_baseline(drop_dc(grid));
    write_jpeg(dropped, output);
    const CompressionRatio ratio = compression_ratio(original, dropped);
    out << "original_bytes=" << original.total_len() << " dropped_bytes=" << dropped.total_len()
        << " ratio=" << fixed(ratio.total, 6) << " scan_ratio=" << fixed(ratio.scan, 6) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_decode(const std::filesystem::path& input, const std::filesystem::path& output,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Image img = coeff_grid_to_image(decode_baseline(read_jpeg(input).bytes));
    save_image(img, output);
    out << "decoded " << img.cols() << "x" << img.rows() << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_recover(const std::filesystem::path& input, const std::filesystem::path& output,
                const RecoverOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Image recovered = recover_image(read_jpeg(input), options.config);
    save_image(recovered, output);
    out << "recovered " << recovered.cols() << "x" << recovered.rows() << '\n';
    if (options.reference) {
      const Image reference = load_image(*options.reference);
      const double p = psnr(recovered, reference);
      out << "psnr_db=" << format_db(p);
      if (reference.rows() >= 11 && reference.cols() >= 11) {
        out << " ssim=" << fixed(ssim(recovered, reference), 6);
      }
      out << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const std::filesystem::path& dir, const std::filesystem::path& report,
              const RecoveryConfig& cfg, int jobs, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto images = list_images(dir);
    if (images.empty()) {
      err << "error: no images in " << dir.string() << '\n';
      return static_cast<int>(kInputError);
    }
    const auto rows = run_bench(images, cfg, jobs);
    std::ofstream csv(report, std::ios::trunc);
    if (!csv) throw IoError("cannot open for writing " + report.string());
    write_bench_csv(csv, rows);
    if (!csv) throw IoError("write failed: " + report.string());
    const auto summary = summary_rows(rows);
    out << "images=" << rows.size() << " ave_ratio=" << fixed(summary[2].ratio, 6)
        << " ave_psnr_zero=" << fixed(summary[2].psnr_zero, 4)
        << " ave_psnr_rec=" << fixed(summary[2].psnr_rec, 4) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_wavext(const std::filesystem::path& input, const std::filesystem::path& output,
               TensorMode mode, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExtendedTensor t = build_tensor(load_rgb(input), mode);
    export_tensor(t, output);
    out << "shape=(" << t.size() << ", " << t.size() << ", 6)\n";
    return static_cast<int>(kOk);
  });
}

int cmd_denoise(const std::filesystem::path& input, const std::filesystem::path& output,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Image img = load_image(input);
    const Image denoised = wd_denoise(img);
    save_image(denoised, output);
    out << "denoised " << img.cols() << "x" << img.rows() << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace dcjpeg::cli
