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
#include <vector>

#include "leafc/errors.hpp"
#include "leafc/image/buffer.hpp"

namespace leafc {

enum class ResizeFilter { nearest, bilinear, box };

namespace detail {

// Area-overlap weights for box resampling along one axis.
struct BoxTap {
  std::size_t index;
  double weight;
};

inline std::vector<std::vector<BoxTap>> box_taps(std::size_t src, std::size_t dst) {
  std::vector<std::vector<BoxTap>> taps(dst);
  const double scale = static_cast<double>(src) / static_cast<double>(dst);
  for (std::size_t o = 0; o < dst; ++o) {
    const double lo = static_cast<double>(o) * scale;
    const double hi = static_cast<double>(o + 1) * scale;
    const auto first = static_cast<std::size_t>(std::floor(lo));
    const auto last = std::min(src, static_cast<std::size_t>(std::ceil(hi)));
    double total = 0.0;
    for (std::size_t i = first; i < last; ++i) {
      const double overlap = std::min(hi, static_cast<double>(i + 1)) - std::max(lo, static_cast<double>(i));
      if (overlap > 0.0) {
        taps[o].push_back({i, overlap});
        total += overlap;
      }
    }
    for (auto& t : taps[o]) t.weight /= total;
  }
  return taps;
}

}  // namespace detail

/// Bilinear sample at continuous pixel-center coordinates with edge replication.
template <std::size_t C>
float sample_bilinear(const Image<float, C>& img, double x, double y, std::size_t c) noexcept {
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const double ax = x - fx;
  const double ay = y - fy;
  const auto x0 = static_cast<std::ptrdiff_t>(fx);
  const auto y0 = static_cast<std::ptrdiff_t>(fy);
  const double v00 = img.clamped(x0, y0, c);
  const double v10 = img.clamped(x0 + 1, y0, c);
  const double v01 = img.clamped(x0, y0 + 1, c);
  const double v11 = img.clamped(x0 + 1, y0 + 1, c);
  const double top = v00 + ax * (v10 - v00);
  const double bottom = v01 + ax * (v11 - v01);
  return static_cast<float>(top + ay * (bottom - top));
}

template <std::size_t C>
Image<float, C> resize(const Image<float, C>& img, std::size_t new_w, std::size_t new_h, ResizeFilter filter) {
  if (new_w == 0 || new_h == 0) throw InvalidArgument("resize target dimensions must be at least 1");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  Image<float, C> out(new_w, new_h);
  const double sx = static_cast<double>(w) / static_cast<double>(new_w);
  const double sy = static_cast<double>(h) / static_cast<double>(new_h);

  switch (filter) {
    case ResizeFilter::nearest:
      for (std::size_t y = 0; y < new_h; ++y) {
        const auto src_y = std::min(h - 1, static_cast<std::size_t>((static_cast<double>(y) + 0.5) * sy));
        for (std::size_t x = 0; x < new_w; ++x) {
          const auto src_x = std::min(w - 1, static_cast<std::size_t>((static_cast<double>(x) + 0.5) * sx));
          for (std::size_t c = 0; c < C; ++c) out.at(x, y, c) = img.at(src_x, src_y, c);
        }
      }
      break;
    case ResizeFilter::bilinear:
      for (std::size_t y = 0; y < new_h; ++y) {
        const double src_y = (static_cast<double>(y) + 0.5) * sy - 0.5;
        for (std::size_t x = 0; x < new_w; ++x) {
          const double src_x = (static_cast<double>(x) + 0.5) * sx - 0.5;
          for (std::size_t c = 0; c < C; ++c) out.at(x, y, c) = sample_bilinear(img, src_x, src_y, c);
        }
      }
      break;
    case ResizeFilter::box: {
      const auto tx = detail::box_taps(w, new_w);
      const auto ty = detail::box_taps(h, new_h);
      for (std::size_t y = 0; y < new_h; ++y) {
        for (std::size_t x = 0; x < new_w; ++x) {
          for (std::size_t c = 0; c < C; ++c) {
            double acc = 0.0;
            for (const auto& b : ty[y])
              for (const auto& a : tx[x]) acc += a.weight * b.weight * img.at(a.index, b.index, c);
            out.at(x, y, c) = static_cast<float>(acc);
          }
        }
      }
      break;
    }
  }
  if constexpr (C == 3) clamp_unit(out);
  return out;
}

}  // namespace leafc
