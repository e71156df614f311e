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
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dcjpeg/errors.hpp"
#include "dcjpeg/image.hpp"

namespace dcjpeg {

enum class Extension {
  Symmetric,     // half-point mirror: x[-1] = x[0]; subbands have floor((N + 7) / 2) samples
  Periodization  // circular, N / 2 samples, orthogonal for even N
};

/// Analysis and synthesis filters of an orthonormal 8-tap wavelet.
struct WaveletSpec {
  std::array<double, 8> dec_lo{};
  std::array<double, 8> dec_hi{};
  std::array<double, 8> rec_lo{};
  std::array<double, 8> rec_hi{};
  Extension extension = Extension::Symmetric;

  static constexpr int kTaps = 8;
};

/// Daubechies wavelet with 4 vanishing moments (8 taps).
WaveletSpec db4(Extension extension = Extension::Symmetric);

/// Level-1 decomposition. lh holds horizontal detail (low-pass along rows, high-pass along
/// columns), hl vertical detail, hh diagonal detail.
template <typename Scalar>
struct SubbandsT {
  PlaneT<Scalar> ll, lh, hl, hh;
  Eigen::Index source_rows = 0;
  Eigen::Index source_cols = 0;
};
using Subbands = SubbandsT<double>;

namespace detail {

inline Eigen::Index mirror_index(Eigen::Index k, Eigen::Index n) {
  while (k < 0 || k >= n) k = k < 0 ? -k - 1 : 2 * n - 1 - k;
  return k;
}

inline Eigen::Index wrap_index(Eigen::Index k, Eigen::Index n) { return ((k % n) + n) % n; }

inline Eigen::Index subband_length(Eigen::Index n, Extension ext) {
  return ext == Extension::Symmetric ? (n + WaveletSpec::kTaps - 1) / 2 : n / 2;
}

// out[o] = sum_j filter[j] * x[2o + 1 - j] with boundary extension.
template <typename Scalar, typename In>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> analyze(const In& x, const std::array<double, 8>& filter,
                                                 Extension ext) {
  const Eigen::Index n = x.size();
  const Eigen::Index len = subband_length(n, ext);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(len);
  for (Eigen::Index o = 0; o < len; ++o) {
    Scalar acc = 0;
    for (int j = 0; j < WaveletSpec::kTaps; ++j) {
      const Eigen::Index k = 2 * o + 1 - j;
      const Eigen::Index idx = ext == Extension::Symmetric ? mirror_index(k, n) : wrap_index(k, n);
      acc += static_cast<Scalar>(filter[static_cast<std::size_t>(j)]) * x(idx);
    }
    out(o) = acc;
  }
  return out;
}

template <typename Scalar, typename In>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> synthesize(const In& approx, const In& detail,
                                                    const WaveletSpec& w, Eigen::Index n) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
  const Eigen::Index len = approx.size();
  if (w.extension == Extension::Symmetric) {
    // Upsample, filter with the synthesis pair, keep the central n samples.
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index m = i + WaveletSpec::kTaps - 2;
      Scalar acc = 0;
      for (Eigen::Index o = 0; o < len; ++o) {
        const Eigen::Index k = m - 2 * o;
        if (k >= 0 && k < WaveletSpec::kTaps) {
          acc += approx(o) * static_cast<Scalar>(w.rec_lo[static_cast<std::size_t>(k)]) +
                 detail(o) * static_cast<Scalar>(w.rec_hi[static_cast<std::size_t>(k)]);
        }
      }
      out(i) = acc;
    }
  } else {
    // Adjoint of the circular analysis operator.
    for (Eigen::Index o = 0; o < len; ++o) {
      for (int j = 0; j < WaveletSpec::kTaps; ++j) {
        const Eigen::Index idx = wrap_index(2 * o + 1 - j, n);
        out(idx) += approx(o) * static_cast<Scalar>(w.dec_lo[static_cast<std::size_t>(j)]) +
                    detail(o) * static_cast<Scalar>(w.dec_hi[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Separable level-1 2D DWT: rows first, then columns, each followed by decimation by 2.
template <typename Scalar>
SubbandsT<Scalar> dwt2(const PlaneT<Scalar>& plane, const WaveletSpec& w = db4()) {
  const Eigen::Index rows = plane.rows();
  const Eigen::Index cols = plane.cols();
  if (rows < WaveletSpec::kTaps || cols < WaveletSpec::kTaps) {
    throw SizeError("dwt2 needs at least 8x8 samples, got " + std::to_string(cols) + "x" +
                    std::to_string(rows));
  }
  if (w.extension == Extension::Periodization && (rows % 2 != 0 || cols % 2 != 0)) {
    throw SizeError("periodized dwt2 needs even dimensions");
  }
  const Eigen::Index sc = detail::subband_length(cols, w.extension);
  const Eigen::Index sr = detail::subband_length(rows, w.extension);

  PlaneT<Scalar> low(rows, sc);
  PlaneT<Scalar> high(rows, sc);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row = plane.row(r).transpose().matrix();
    low.row(r) = detail::analyze<Scalar>(row, w.dec_lo, w.extension).transpose().array();
    high.row(r) = detail::analyze<Scalar>(row, w.dec_hi, w.extension).transpose().array();
  }

  SubbandsT<Scalar> out;
  out.source_rows = rows;
  out.source_cols = cols;
  out.ll.resize(sr, sc);
  out.lh.resize(sr, sc);
  out.hl.resize(sr, sc);
  out.hh.resize(sr, sc);
  for (Eigen::Index c = 0; c < sc; ++c) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lo = low.col(c).matrix();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hi = high.col(c).matrix();
    out.ll.col(c) = detail::analyze<Scalar>(lo, w.dec_lo, w.extension).array();
    out.lh.col(c) = detail::analyze<Scalar>(lo, w.dec_hi, w.extension).array();
    out.hl.col(c) = detail::analyze<Scalar>(hi, w.dec_lo, w.extension).array();
    out.hh.col(c) = detail::analyze<Scalar>(hi, w.dec_hi, w.extension).array();
  }
  return out;
}

/// Inverse of dwt2, reconstructing `rows` x `cols` samples.
template <typename Scalar>
PlaneT<Scalar> idwt2(const SubbandsT<Scalar>& sb, Eigen::Index rows, Eigen::Index cols,
                     const WaveletSpec& w = db4()) {
  const Eigen::Index sr = sb.ll.rows();
  const Eigen::Index sc = sb.ll.cols();
  for (const PlaneT<Scalar>* band : {&sb.lh, &sb.hl, &sb.hh}) {
    if (band->rows() != sr || band->cols() != sc) throw DimensionError("subbands differ in size");
  }
  if (detail::subband_length(rows, w.extension) != sr ||
      detail::subband_length(cols, w.extension) != sc) {
    throw DimensionError("subband size " + std::to_string(sc) + "x" + std::to_string(sr) +
                         " does not match output " + std::to_string(cols) + "x" + std::to_string(rows));
  }
  PlaneT<Scalar> low(rows, sc);
  PlaneT<Scalar> high(rows, sc);
  for (Eigen::Index c = 0; c < sc; ++c) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> ll = sb.ll.col(c).matrix();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lh = sb.lh.col(c).matrix();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hl = sb.hl.col(c).matrix();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hh = sb.hh.col(c).matrix();
    low.col(c) = detail::synthesize<Scalar>(ll, lh, w, rows).array();
    high.col(c) = detail::synthesize<Scalar>(hl, hh, w, rows).array();
  }
  PlaneT<Scalar> out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lo = low.row(r).transpose().matrix();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hi = high.row(r).transpose().matrix();
    out.row(r) = detail::synthesize<Scalar>(lo, hi, w, cols).transpose().array();
  }
  return out;
}

template <typename Scalar>
PlaneT<Scalar> idwt2(const SubbandsT<Scalar>& sb, const WaveletSpec& w = db4()) {
  return idwt2(sb, sb.source_rows, sb.source_cols, w);
}

/// Robust noise level from the finest diagonal subband: median(|hh|) / 0.6745.
double noise_sigma(const Plane& hh);

/// BayesShrink threshold sigma^2 / sigma_x with sigma_x = sqrt(max(mean(x^2) - sigma^2, 0)).
/// Zero when sigma is zero; infinity (remove the subband) when sigma_x is zero.
double bayes_threshold(const Plane& subband, double sigma);

inline double soft_threshold(double x, double threshold) {
  if (std::isinf(threshold)) return 0.0;
  const double shrunk = std::abs(x) - threshold;
  return shrunk > 0.0 ? std::copysign(shrunk, x) : 0.0;
}

/// Per-subband BayesShrink with soft thresholding of every detail band. The noise level is
/// estimated once, from the diagonal band of the first level.
Plane wd_denoise(const Plane& plane, int levels = 1, const WaveletSpec& w = db4());
Image wd_denoise(const Image& img, int levels = 1);

}  // namespace dcjpeg
