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

#include "leafc/image/buffer.hpp"

namespace leafc {

struct Rgb {
  double r, g, b;
};

/// Hue in [0,1) (fraction of a turn), lightness and saturation in [0,1].
struct Hls {
  double h, l, s;
};

inline Hls rgb_to_hls(const Rgb& p) noexcept {
  const double maxc = std::max({p.r, p.g, p.b});
  const double minc = std::min({p.r, p.g, p.b});
  const double l = (minc + maxc) / 2.0;
  if (maxc == minc) return {0.0, l, 0.0};
  const double range = maxc - minc;
  const double s = l <= 0.5 ? range / (maxc + minc) : range / (2.0 - maxc - minc);
  const double rc = (maxc - p.r) / range;
  const double gc = (maxc - p.g) / range;
  const double bc = (maxc - p.b) / range;
  double h;
  if (p.r == maxc)
    h = bc - gc;
  else if (p.g == maxc)
    h = 2.0 + rc - bc;
  else
    h = 4.0 + gc - rc;
  h = h / 6.0;
  h -= std::floor(h);
  return {h, l, s};
}

namespace detail {
inline double hls_channel(double m1, double m2, double hue) noexcept {
  hue -= std::floor(hue);
  if (hue < 1.0 / 6.0) return m1 + (m2 - m1) * hue * 6.0;
  if (hue < 0.5) return m2;
  if (hue < 2.0 / 3.0) return m1 + (m2 - m1) * (2.0 / 3.0 - hue) * 6.0;
  return m1;
}
}  // namespace detail

inline Rgb hls_to_rgb(const Hls& p) noexcept {
  if (p.s == 0.0) return {p.l, p.l, p.l};
  const double m2 = p.l <= 0.5 ? p.l * (1.0 + p.s) : p.l + p.s - p.l * p.s;
  const double m1 = 2.0 * p.l - m2;
  return {detail::hls_channel(m1, m2, p.h + 1.0 / 3.0), detail::hls_channel(m1, m2, p.h),
          detail::hls_channel(m1, m2, p.h - 1.0 / 3.0)};
}

/// Per-pixel HLS planes kept in double so a round trip stays well inside 1e-6.
using HlsImage = Image<double, 3>;

inline HlsImage rgb_to_hls(const ImageBuffer& img) {
  HlsImage out(img.width(), img.height());
  const auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    const auto hls = rgb_to_hls(Rgb{src[i], src[i + 1], src[i + 2]});
    dst[i] = hls.h;
    dst[i + 1] = hls.l;
    dst[i + 2] = hls.s;
  }
  return out;
}

inline ImageBuffer hls_to_rgb(const HlsImage& img) {
  ImageBuffer out(img.width(), img.height());
  const auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    const auto rgb = hls_to_rgb(Hls{src[i], src[i + 1], src[i + 2]});
    dst[i] = static_cast<float>(rgb.r);
    dst[i + 1] = static_cast<float>(rgb.g);
    dst[i + 2] = static_cast<float>(rgb.b);
  }
  clamp_unit(out);
  return out;
}

/// ITU-R BT.601 luma.
inline double luma(double r, double g, double b) noexcept { return 0.299 * r + 0.587 * g + 0.114 * b; }

}  // namespace leafc
