// Copyright 2026 The leafc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "leafc/corrupt/params.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/kernel.hpp"
#include "leafc/image/resize.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

/// Magnifies about the image center by `zoom`, keeping the output size (a center crop of
/// 1/zoom of the frame, rescaled bilinearly). zoom == 1 reproduces the input exactly.
template <std::size_t C>
Image<float, C> clipped_zoom(const Image<float, C>& img, double zoom) {
  if (!(zoom > 0.0)) throw InvalidArgument("zoom factor must be positive");
  const double cx = static_cast<double>(img.width()) / 2.0;
  const double cy = static_cast<double>(img.height()) / 2.0;
  Image<float, C> out(img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const double sy = (static_cast<double>(y) + 0.5 - cy) / zoom + cy - 0.5;
    for (std::size_t x = 0; x < img.width(); ++x) {
      const double sx = (static_cast<double>(x) + 0.5 - cx) / zoom + cx - 0.5;
      for (std::size_t c = 0; c < C; ++c) out.at(x, y, c) = sample_bilinear(img, sx, sy, c);
    }
  }
  return out;
}

/// Uniform draw in degrees mapped to [0, 2pi) radians.
inline double draw_angle(Rng& rng, double min_deg, double max_deg) {
  const double deg = min_deg == max_deg ? min_deg : rng.uniform(min_deg, max_deg);
  double rad = deg * std::numbers::pi / 180.0;
  rad = std::fmod(rad, 2.0 * std::numbers::pi);
  if (rad < 0.0) rad += 2.0 * std::numbers::pi;
  if (rad >= 2.0 * std::numbers::pi) rad = 0.0;
  return rad;
}

inline ImageBuffer corrupt(const ImageBuffer& img, const GaussianBlurParams& p, Rng&) {
  check_params(p);
  auto out = gaussian_filter(img, p.sigma);
  clamp_unit(out);
  return out;
}

inline ImageBuffer corrupt(const ImageBuffer& img, const DefocusBlurParams& p, Rng&) {
  check_params(p);
  return convolve2d(img, make_kernel(KernelShape::disc, p.radius));
}

inline ImageBuffer corrupt(const ImageBuffer& img, const MotionBlurParams& p, Rng& rng) {
  check_params(p);
  const double angle = draw_angle(rng, p.angle_min_deg, p.angle_max_deg);
  return convolve2d(img, make_kernel(KernelShape::motion_line, p.length, angle));
}

/// Mean of the image and each zoomed copy in the ladder.
inline ImageBuffer corrupt(const ImageBuffer& img, const ZoomBlurParams& p, Rng&) {
  check_params(p);
  std::vector<double> acc(img.data().begin(), img.data().end());
  for (double z : p.ladder) {
    const auto zoomed = clipped_zoom(img, z);
    const auto src = zoomed.data();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += src[i];
  }
  ImageBuffer out(img.width(), img.height());
  const double n = static_cast<double>(p.ladder.size() + 1);
  auto dst = out.data();
  for (std::size_t i = 0; i < acc.size(); ++i) dst[i] = static_cast<float>(acc[i] / n);
  clamp_unit(out);
  return out;
}

/// Blur, locally shuffle pixels, blur again. Each pass walks rows and columns from the far
/// corner inward, swapping every pixel with a neighbor drawn uniformly from the
/// (2 * max_shift + 1)^2 window.
inline ImageBuffer corrupt(const ImageBuffer& img, const GlassBlurParams& p, Rng& rng) {
  check_params(p);
  auto work = gaussian_filter(img, p.sigma);
  const auto d = static_cast<std::ptrdiff_t>(p.max_shift);
  const auto w = static_cast<std::ptrdiff_t>(img.width());
  const auto h = static_cast<std::ptrdiff_t>(img.height());
  for (int it = 0; it < p.iterations; ++it) {
    for (std::ptrdiff_t y = h - 1 - d; y >= d; --y) {
      for (std::ptrdiff_t x = w - 1 - d; x >= d; --x) {
        const auto dx = rng.uniform_int(-d, d);
        const auto dy = rng.uniform_int(-d, d);
        const auto x2 = static_cast<std::size_t>(x + dx);
        const auto y2 = static_cast<std::size_t>(y + dy);
        for (std::size_t c = 0; c < 3; ++c)
          std::swap(work.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y), c), work.at(x2, y2, c));
      }
    }
  }
  auto out = gaussian_filter(work, p.sigma);
  clamp_unit(out);
  return out;
}

}  // namespace leafc
