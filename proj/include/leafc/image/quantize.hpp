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
#include <cstdint>

#include "leafc/image/buffer.hpp"

namespace leafc {

/// Clamp to [0,1], then round half up onto 256 levels.
inline std::uint8_t quantize_sample(float v) noexcept {
  if (!(v > 0.0f)) return 0;  // also maps NaN to 0
  if (v >= 1.0f) return 255;
  return static_cast<std::uint8_t>(std::floor(static_cast<double>(v) * 255.0 + 0.5));
}

inline Raster8 quantize(const ImageBuffer& img) {
  Raster8 out(img.width(), img.height());
  const auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = quantize_sample(src[i]);
  return out;
}

inline ImageBuffer dequantize(const Raster8& raster) {
  ImageBuffer out(raster.width(), raster.height());
  const auto src = raster.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<float>(src[i] / 255.0);
  return out;
}

}  // namespace leafc
