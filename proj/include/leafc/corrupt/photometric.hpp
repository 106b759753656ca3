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

#include "leafc/corrupt/params.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/color.hpp"

namespace leafc {

/// Adds `offset` to HLS lightness.
inline ImageBuffer corrupt(const ImageBuffer& img, const BrightnessParams& p) {
  check_params(p);
  ImageBuffer out(img.width(), img.height());
  const auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    auto hls = rgb_to_hls(Rgb{src[i], src[i + 1], src[i + 2]});
    hls.l = std::clamp(hls.l + p.offset, 0.0, 1.0);
    const auto rgb = hls_to_rgb(hls);
    dst[i] = static_cast<float>(rgb.r);
    dst[i + 1] = static_cast<float>(rgb.g);
    dst[i + 2] = static_cast<float>(rgb.b);
  }
  clamp_unit(out);
  return out;
}

/// (x - mean) * factor + mean per channel, with the channel's global mean.
inline ImageBuffer corrupt(const ImageBuffer& img, const ContrastParams& p) {
  check_params(p);
  std::array<double, 3> mean{};
  const auto src = img.data();
  for (std::size_t i = 0; i < src.size(); ++i) mean[i % 3] += src[i];
  for (auto& m : mean) m /= static_cast<double>(img.pixel_count());
  ImageBuffer out(img.width(), img.height());
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double m = mean[i % 3];
    dst[i] = static_cast<float>((src[i] - m) * p.factor + m);
  }
  clamp_unit(out);
  return out;
}

/// Scales and offsets HLS saturation of chromatic pixels; achromatic pixels (no hue) stay gray.
inline ImageBuffer corrupt(const ImageBuffer& img, const SaturateParams& p) {
  check_params(p);
  ImageBuffer out(img.width(), img.height());
  const auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    auto hls = rgb_to_hls(Rgb{src[i], src[i + 1], src[i + 2]});
    if (hls.s == 0.0) {
      dst[i] = src[i];
      dst[i + 1] = src[i + 1];
      dst[i + 2] = src[i + 2];
      continue;
    }
    hls.s = std::clamp(hls.s * p.scale + p.offset, 0.0, 1.0);
    const auto rgb = hls_to_rgb(hls);
    dst[i] = static_cast<float>(rgb.r);
    dst[i + 1] = static_cast<float>(rgb.g);
    dst[i + 2] = static_cast<float>(rgb.b);
  }
  clamp_unit(out);
  return out;
}

}  // namespace leafc
