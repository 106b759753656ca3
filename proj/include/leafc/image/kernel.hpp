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
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "leafc/errors.hpp"
#include "leafc/image/buffer.hpp"

namespace leafc {

enum class KernelShape { gaussian, disc, motion_line };

/// Square convolution kernel with odd side length, weights stored row-major.
class Kernel2D {
 public:
  Kernel2D(std::size_t size, std::vector<double> weights) : size_(size), weights_(std::move(weights)) {
    if (size_ % 2 == 0) throw InvalidArgument("kernel size must be odd, got " + std::to_string(size_));
    if (weights_.size() != size_ * size_) throw InvalidArgument("kernel weight count does not match size");
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t half() const noexcept { return size_ / 2; }
  double operator()(std::size_t x, std::size_t y) const noexcept { return weights_[y * size_ + x]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  double sum() const noexcept {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

 private:
  std::size_t size_;
  std::vector<double> weights_;
};

namespace detail {

inline void normalize(std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  for (double& v : w) v /= s;
}

inline std::size_t gaussian_radius(double sigma) {
  return static_cast<std::size_t>(4.0 * sigma + 0.5);
}

// Clamped source index for each (output index, tap) pair.
inline std::vector<std::size_t> clamped_offsets(std::size_t n, std::size_t taps) {
  const auto half = static_cast<std::ptrdiff_t>(taps / 2);
  std::vector<std::size_t> idx(n * taps);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < taps; ++t) {
      const auto s = static_cast<std::ptrdiff_t>(i) + static_cast<std::ptrdiff_t>(t) - half;
      idx[i * taps + t] = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(s, 0, static_cast<std::ptrdiff_t>(n) - 1));
    }
  }
  return idx;
}

}  // namespace detail

/// Normalized 1-D sampled Gaussian, radius round(4 sigma).
inline std::vector<double> gaussian_taps(double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian sigma must be positive");
  const std::size_t r = detail::gaussian_radius(sigma);
  std::vector<double> taps(2 * r + 1);
  for (std::size_t i = 0; i < taps.size(); ++i) {
    const double d = static_cast<double>(i) - static_cast<double>(r);
    taps[i] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  detail::normalize(taps);
  return taps;
}

/// Builds a normalized smoothing kernel.
///
/// `param` is sigma for `gaussian`, the radius for `disc`, and the line length in pixels for
/// `motion_line`. `angle` (radians, [0, 2pi)) only affects `motion_line`; 0 is horizontal and
/// positive angles rotate counter-clockwise in image coordinates (y down).
///
/// Discs with radius below 8 are hard indicators of the pixels whose centers lie within the
/// radius; larger discs get a one-pixel anti-aliased rim.
inline Kernel2D make_kernel(KernelShape shape, double param, double angle = 0.0) {
  if (!(param > 0.0) || !std::isfinite(param))
    throw InvalidArgument("kernel sigma/radius/length must be positive and finite");
  if (!(angle >= 0.0 && angle < 2.0 * std::numbers::pi))
    throw InvalidArgument("kernel angle must lie in [0, 2pi)");

  switch (shape) {
    case KernelShape::gaussian: {
      const auto taps = gaussian_taps(param);
      const std::size_t n = taps.size();
      std::vector<double> w(n * n);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) w[y * n + x] = taps[y] * taps[x];
      detail::normalize(w);
      return Kernel2D(n, std::move(w));
    }
    case KernelShape::disc: {
      const bool antialias = param >= 8.0;
      const auto r = static_cast<std::size_t>(std::ceil(param + (antialias ? 0.5 : 0.0)));
      const std::size_t n = 2 * r + 1;
      std::vector<double> w(n * n, 0.0);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
          const double dx = static_cast<double>(x) - static_cast<double>(r);
          const double dy = static_cast<double>(y) - static_cast<double>(r);
          const double d = std::sqrt(dx * dx + dy * dy);
          w[y * n + x] = antialias ? std::clamp(param + 0.5 - d, 0.0, 1.0) : (d <= param ? 1.0 : 0.0);
        }
      }
      detail::normalize(w);
      return Kernel2D(n, std::move(w));
    }
    case KernelShape::motion_line: {
      const auto length = static_cast<std::size_t>(std::lround(param));
      if (length == 0) throw InvalidArgument("motion kernel length must be at least 1");
      const std::size_t r = length / 2;
      const std::size_t n = 2 * r + 1;
      std::vector<double> w(n * n, 0.0);
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      for (std::size_t k = 0; k < length; ++k) {
        const double t = static_cast<double>(k) - static_cast<double>(length - 1) / 2.0;
        const auto px = static_cast<std::ptrdiff_t>(std::lround(static_cast<double>(r) + t * c));
        const auto py = static_cast<std::ptrdiff_t>(std::lround(static_cast<double>(r) - t * s));
        const auto cx = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(px, 0, static_cast<std::ptrdiff_t>(n) - 1));
        const auto cy = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(py, 0, static_cast<std::ptrdiff_t>(n) - 1));
        w[cy * n + cx] += 1.0;
      }
      detail::normalize(w);
      return Kernel2D(n, std::move(w));
    }
  }
  throw InvalidArgument("unknown kernel shape");
}

/// 2-D correlation with edge replication, no clamping. Works on any channel count.
template <std::size_t C>
Image<float, C> convolve(const Image<float, C>& img, const Kernel2D& k) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t n = k.size();
  const auto xs = detail::clamped_offsets(w, n);
  const auto ys = detail::clamped_offsets(h, n);
  Image<float, C> out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double acc[C] = {};
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t sy = ys[y * n + j];
        for (std::size_t i = 0; i < n; ++i) {
          const double wt = k(i, j);
          if (wt == 0.0) continue;
          const std::size_t sx = xs[x * n + i];
          for (std::size_t c = 0; c < C; ++c) acc[c] += wt * img.at(sx, sy, c);
        }
      }
      for (std::size_t c = 0; c < C; ++c) out.at(x, y, c) = static_cast<float>(acc[c]);
    }
  }
  return out;
}

/// convolve followed by clamping into [0,1].
inline ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2D& k) {
  auto out = convolve(img, k);
  clamp_unit(out);
  return out;
}

/// Horizontal then vertical pass with the same 1-D taps, edge replication, no clamping.
template <std::size_t C>
Image<float, C> convolve_separable(const Image<float, C>& img, const std::vector<double>& taps) {
  if (taps.size() % 2 == 0) throw InvalidArgument("separable kernel length must be odd");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t n = taps.size();
  const auto xs = detail::clamped_offsets(w, n);
  const auto ys = detail::clamped_offsets(h, n);
  std::vector<double> tmp(w * h * C);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      for (std::size_t c = 0; c < C; ++c) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += taps[i] * img.at(xs[x * n + i], y, c);
        tmp[(y * w + x) * C + c] = acc;
      }
    }
  }
  Image<float, C> out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      for (std::size_t c = 0; c < C; ++c) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += taps[j] * tmp[(ys[y * n + j] * w + x) * C + c];
        out.at(x, y, c) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

/// Separable Gaussian smoothing, equivalent to convolve with make_kernel(gaussian, sigma).
template <std::size_t C>
Image<float, C> gaussian_filter(const Image<float, C>& img, double sigma) {
  return convolve_separable(img, gaussian_taps(sigma));
}

}  // namespace leafc
