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

#include "dcjpeg/wavelet.hpp"

#include <algorithm>
#include <vector>

namespace dcjpeg {

WaveletSpec db4(Extension extension) {
  // Scaling filter h[0..7] of the Daubechies wavelet with 4 vanishing moments.
  constexpr std::array<double, 8> h = {
      0.23037781330889650086, 0.71484657055291564709, 0.63088076792985890788,
      -0.02798376941685985421, -0.18703481171909308408, 0.03084138183556076363,
      0.03288301166688519974, -0.01059740178506903210};
  WaveletSpec w;
  w.extension = extension;
  for (int k = 0; k < 8; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    w.rec_lo[k] = h[k];
    w.dec_lo[k] = h[7 - k];
    w.rec_hi[k] = sign * h[7 - k];
    w.dec_hi[k] = -sign * h[k];
  }
  return w;
}

double noise_sigma(const Plane& hh) {
  if (hh.size() == 0) return 0.0;
  std::vector<double> mags(hh.data(), hh.data() + hh.size());
  for (double& v : mags) v = std::abs(v);
  const std::size_t mid = mags.size() / 2;
  std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid), mags.end());
  double median = mags[mid];
  if (mags.size() % 2 == 0) {
    const double lower = *std::max_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid));
    median = 0.5 * (median + lower);
  }
  return median / 0.6745;
}

double bayes_threshold(const Plane& subband, double sigma) {
  if (sigma <= 0.0) return 0.0;
  const double energy = subband.size() == 0 ? 0.0 : subband.square().mean();
  const double signal = std::sqrt(std::max(energy - sigma * sigma, 0.0));
  if (signal == 0.0) return std::numeric_limits<double>::infinity();
  return sigma * sigma / signal;
}

namespace {

void shrink(Plane& band, double sigma) {
  const double t = bayes_threshold(band, sigma);
  band = band.unaryExpr([t](double x) { return soft_threshold(x, t); });
}

Plane denoise_level(const Plane& plane, int levels, const WaveletSpec& w, double* sigma) {
  Subbands sb = dwt2(plane, w);
  if (sigma != nullptr && *sigma < 0.0) *sigma = noise_sigma(sb.hh);
  if (levels > 1) sb.ll = denoise_level(sb.ll, levels - 1, w, sigma);
  shrink(sb.lh, *sigma);
  shrink(sb.hl, *sigma);
  shrink(sb.hh, *sigma);
  return idwt2(sb, w);
}

}  // namespace

Plane wd_denoise(const Plane& plane, int levels, const WaveletSpec& w) {
  if (levels < 1) throw std::invalid_argument("wd_denoise needs at least one level");
  double sigma = -1.0;
  return denoise_level(plane, levels, w, &sigma);
}

Image wd_denoise(const Image& img, int levels) { return from_plane(wd_denoise(to_plane(img), levels)); }

}  // namespace dcjpeg
