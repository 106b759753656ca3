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

#include <algorithm>
#include <array>
#include <cmath>

#include "leafc/corrupt/params.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/codec.hpp"
#include "leafc/image/kernel.hpp"
#include "leafc/image/quantize.hpp"
#include "leafc/image/resize.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

namespace detail {

// 2x3 affine map taking each `from` point onto the matching `to` point (Cramer's rule).
using Affine = std::array<double, 6>;

inline Affine solve_affine(const std::array<double, 6>& from, const std::array<double, 6>& to) {
  const double x0 = from[0], y0 = from[1], x1 = from[2], y1 = from[3], x2 = from[4], y2 = from[5];
  const double det = x0 * (y1 - y2) - y0 * (x1 - x2) + (x1 * y2 - x2 * y1);
  if (det == 0.0) throw InvalidArgument("degenerate affine control points");
  Affine m{};
  for (int row = 0; row < 2; ++row) {
    const double u0 = to[0 + row], u1 = to[2 + row], u2 = to[4 + row];
    m[row * 3 + 0] = (u0 * (y1 - y2) - y0 * (u1 - u2) + (u1 * y2 - u2 * y1)) / det;
    m[row * 3 + 1] = (x0 * (u1 - u2) - u0 * (x1 - x2) + (x1 * u2 - x2 * u1)) / det;
    m[row * 3 + 2] = (x0 * (y1 * u2 - y2 * u1) - y0 * (x1 * u2 - x2 * u1) + u0 * (x1 * y2 - x2 * y1)) / det;
  }
  return m;
}

inline Field displacement_field(std::size_t w, std::size_t h, double sigma, double amplitude, Rng& rng) {
  Field f(w, h);
  for (auto& v : f.data()) v = static_cast<float>(rng.uniform(-1.0, 1.0));
  if (sigma > 0.0) f = gaussian_filter(f, sigma);
  float peak = 0.0f;
  for (float v : f.data()) peak = std::max(peak, std::fabs(v));
  const float scale = peak > 0.0f ? static_cast<float>(amplitude) / peak : 0.0f;
  for (auto& v : f.data()) v *= scale;
  return f;
}

}  // namespace detail

/// Random affine jitter of three control points around the center, composed with a smoothed
/// random displacement field, resampled once with bilinear interpolation and edge replication.
inline ImageBuffer corrupt(const ImageBuffer& img, const ElasticParams& p, Rng& rng) {
  check_params(p);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const double side = static_cast<double>(std::min(w, h));
  const double amplitude = p.amplitude * side;
  const double sigma = p.sigma * side;
  const double jitter = p.affine * side;

  const double cx = static_cast<double>(w) / 2.0;
  const double cy = static_cast<double>(h) / 2.0;
  const double sq = side / 3.0;
  const std::array<double, 6> anchors = {cx + sq, cy + sq, cx + sq, cy - sq, cx - sq, cy - sq};
  std::array<double, 6> moved = anchors;
  for (auto& v : moved) v += rng.uniform(-jitter, jitter);
  // Output pixel q samples the source at inverse(affine)(q + d(q)).
  const auto inv = detail::solve_affine(moved, anchors);

  const Field dx = detail::displacement_field(w, h, sigma, amplitude, rng);
  const Field dy = detail::displacement_field(w, h, sigma, amplitude, rng);

  ImageBuffer out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double qx = static_cast<double>(x) + dx.at(x, y);
      const double qy = static_cast<double>(y) + dy.at(x, y);
      const double sx = inv[0] * qx + inv[1] * qy + inv[2];
      const double sy = inv[3] * qx + inv[4] * qy + inv[5];
      for (std::size_t c = 0; c < 3; ++c) out.at(x, y, c) = sample_bilinear(img, sx, sy, c);
    }
  }
  clamp_unit(out);
  return out;
}

/// Box-downscale by the shrink fraction, then nearest-neighbor back to the original size.
inline ImageBuffer corrupt(const ImageBuffer& img, const PixelateParams& p) {
  check_params(p);
  const auto small_w = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(img.width() * p.shrink)));
  const auto small_h = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(img.height() * p.shrink)));
  if (small_w == img.width() && small_h == img.height()) return img;
  const auto small = resize(img, small_w, small_h, ResizeFilter::box);
  return resize(small, img.width(), img.height(), ResizeFilter::nearest);
}

/// The encoded stream the jpeg corruption decodes; the dataset builder stores these bytes as-is.
inline Bytes jpeg_stream(const ImageBuffer& img, const JpegParams& p) {
  check_params(p);
  return encode_jpeg(quantize(img), p.quality);
}

inline ImageBuffer corrupt(const ImageBuffer& img, const JpegParams& p) {
  return dequantize(decode_jpeg(jpeg_stream(img, p)));
}

}  // namespace leafc
