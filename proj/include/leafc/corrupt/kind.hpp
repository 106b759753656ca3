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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "leafc/errors.hpp"

namespace leafc {

/// The 19 corruption types, in the block order used by the CE tables: noise, blur, weather,
/// digital.
enum class CorruptionKind {
  gaussian_noise,
  shot_noise,
  impulse_noise,
  speckle_noise,
  defocus_blur,
  glass_blur,
  motion_blur,
  zoom_blur,
  gaussian_blur,
  snow,
  frost,
  fog,
  brightness,
  spatter,
  contrast,
  elastic,
  jpeg,
  pixelate,
  saturate,
};

inline constexpr std::size_t kCorruptionCount = 19;
inline constexpr int kMinSeverity = 1;
inline constexpr int kMaxSeverity = 5;

enum class CorruptionGroup { noise, blur, weather, digital };

inline constexpr std::array<CorruptionKind, kCorruptionCount> kAllCorruptions = {
    CorruptionKind::gaussian_noise, CorruptionKind::shot_noise,    CorruptionKind::impulse_noise,
    CorruptionKind::speckle_noise,  CorruptionKind::defocus_blur,  CorruptionKind::glass_blur,
    CorruptionKind::motion_blur,    CorruptionKind::zoom_blur,     CorruptionKind::gaussian_blur,
    CorruptionKind::snow,           CorruptionKind::frost,         CorruptionKind::fog,
    CorruptionKind::brightness,     CorruptionKind::spatter,       CorruptionKind::contrast,
    CorruptionKind::elastic,        CorruptionKind::jpeg,          CorruptionKind::pixelate,
    CorruptionKind::saturate,
};

inline constexpr std::array<std::string_view, kCorruptionCount> kCorruptionNames = {
    "gaussian_noise", "shot_noise", "impulse_noise", "speckle_noise", "defocus_blur",
    "glass_blur",     "motion_blur", "zoom_blur",    "gaussian_blur", "snow",
    "frost",          "fog",         "brightness",   "spatter",       "contrast",
    "elastic",        "jpeg",        "pixelate",     "saturate",
};

constexpr std::string_view name(CorruptionKind kind) noexcept {
  return kCorruptionNames[static_cast<std::size_t>(kind)];
}

constexpr std::optional<CorruptionKind> parse_kind(std::string_view token) noexcept {
  for (std::size_t i = 0; i < kCorruptionCount; ++i)
    if (kCorruptionNames[i] == token) return kAllCorruptions[i];
  return std::nullopt;
}

inline CorruptionKind kind_from_name(std::string_view token) {
  if (auto k = parse_kind(token)) return *k;
  throw InvalidArgument("unknown corruption kind '" + std::string(token) + "'");
}

constexpr CorruptionGroup group_of(CorruptionKind kind) noexcept {
  const auto i = static_cast<std::size_t>(kind);
  if (i < 4) return CorruptionGroup::noise;
  if (i < 9) return CorruptionGroup::blur;
  if (i < 14) return CorruptionGroup::weather;
  return CorruptionGroup::digital;
}

constexpr std::string_view name(CorruptionGroup group) noexcept {
  switch (group) {
    case CorruptionGroup::noise: return "noise";
    case CorruptionGroup::blur: return "blur";
    case CorruptionGroup::weather: return "weather";
    case CorruptionGroup::digital: return "digital";
  }
  return "";
}

/// Kinds whose output does not depend on the random stream.
constexpr bool is_deterministic(CorruptionKind kind) noexcept {
  switch (kind) {
    case CorruptionKind::gaussian_blur:
    case CorruptionKind::defocus_blur:
    case CorruptionKind::zoom_blur:
    case CorruptionKind::brightness:
    case CorruptionKind::contrast:
    case CorruptionKind::saturate:
    case CorruptionKind::pixelate:
    case CorruptionKind::jpeg:
      return true;
    default:
      return false;
  }
}

inline void check_severity(int severity) {
  if (severity < kMinSeverity || severity > kMaxSeverity)
    throw InvalidArgument("severity must lie in [1,5], got " + std::to_string(severity));
}

}  // namespace leafc
