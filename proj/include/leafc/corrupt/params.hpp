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
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "leafc/corrupt/kind.hpp"

namespace leafc {

// Parameter records, one per corruption kind. Distances are in pixels unless noted; the elastic
// parameters are fractions of the shorter image side so they scale with resolution.

struct GaussianNoiseParams { double sigma = 0.0; };
struct ShotNoiseParams { double photons = 1.0; };     ///< output = Poisson(x * photons) / photons
struct ImpulseNoiseParams { double amount = 0.0; };   ///< fraction of samples set to 0 or 1
struct SpeckleNoiseParams { double sigma = 0.0; };
struct DefocusBlurParams { double radius = 1.0; };
struct GlassBlurParams {
  double sigma = 1.0;
  int max_shift = 1;
  int iterations = 1;
};
struct MotionBlurParams {
  double length = 1.0;
  double angle_min_deg = 0.0;
  double angle_max_deg = 0.0;
};
struct ZoomBlurParams { std::vector<double> ladder{1.0}; };
struct GaussianBlurParams { double sigma = 1.0; };
struct SnowParams {
  double mean = 0.0;
  double stddev = 0.0;
  double zoom = 1.0;
  double threshold = 1.0;
  double motion_length = 1.0;
  double angle_min_deg = 0.0;
  double angle_max_deg = 0.0;
  double blend = 1.0;  ///< weight kept by the un-whitened image
};
struct FrostParams {
  double image_weight = 1.0;
  double frost_weight = 0.0;
};
struct FogParams {
  double alpha = 0.0;         ///< blend weight toward the haze
  double wibble_decay = 2.0;
  double haze_level = 1.0;    ///< maximum haze intensity
};
struct BrightnessParams { double offset = 0.0; };
struct SpatterParams {
  double mean = 0.0;
  double stddev = 0.0;
  double sigma = 1.0;
  double threshold = 1.0;
  double strength = 0.0;
  bool mud = false;
  double mud_sigma = 1.0;
};
struct ContrastParams { double factor = 1.0; };
struct ElasticParams {
  double amplitude = 0.0;
  double sigma = 0.0;
  double affine = 0.0;
};
struct JpegParams { int quality = 100; };
struct PixelateParams { double shrink = 1.0; };
struct SaturateParams {
  double scale = 1.0;
  double offset = 0.0;
};

/// Alternative index equals the CorruptionKind ordinal.
using CorruptionParams =
    std::variant<GaussianNoiseParams, ShotNoiseParams, ImpulseNoiseParams, SpeckleNoiseParams, DefocusBlurParams,
                 GlassBlurParams, MotionBlurParams, ZoomBlurParams, GaussianBlurParams, SnowParams, FrostParams,
                 FogParams, BrightnessParams, SpatterParams, ContrastParams, ElasticParams, JpegParams,
                 PixelateParams, SaturateParams>;

static_assert(std::variant_size_v<CorruptionParams> == kCorruptionCount);

struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::gaussian_noise;
  int severity = 1;
  CorruptionParams params;
};

inline CorruptionSpec make_spec(CorruptionParams params, int severity = 1) {
  const auto kind = static_cast<CorruptionKind>(params.index());
  return CorruptionSpec{kind, severity, std::move(params)};
}

}  // namespace leafc

namespace leafc {

namespace detail {
inline void require(bool ok, CorruptionKind kind, const char* what) {
  if (!ok) throw InvalidArgument(std::string(name(kind)) + ": " + what);
}
inline bool unit(double v) { return v >= 0.0 && v <= 1.0; }
}  // namespace detail

/// Range checks shared by the severity-table loader and apply_corruption.
inline void check_params(const CorruptionParams& params) {
  using detail::require;
  using detail::unit;
  const auto kind = static_cast<CorruptionKind>(params.index());
  std::visit(
      [kind](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GaussianNoiseParams> || std::is_same_v<P, SpeckleNoiseParams>) {
          require(p.sigma >= 0.0, kind, "sigma must be >= 0");
        } else if constexpr (std::is_same_v<P, ShotNoiseParams>) {
          require(p.photons > 0.0 && std::isfinite(p.photons), kind, "photon scale must be positive");
        } else if constexpr (std::is_same_v<P, ImpulseNoiseParams>) {
          require(unit(p.amount), kind, "flip fraction must lie in [0,1]");
        } else if constexpr (std::is_same_v<P, DefocusBlurParams>) {
          require(p.radius > 0.0, kind, "radius must be positive");
        } else if constexpr (std::is_same_v<P, GlassBlurParams>) {
          require(p.sigma > 0.0, kind, "sigma must be positive");
          require(p.max_shift >= 0 && p.iterations >= 0, kind, "shift and iterations must be >= 0");
        } else if constexpr (std::is_same_v<P, MotionBlurParams>) {
          require(p.length >= 1.0, kind, "kernel length must be at least 1");
          require(p.angle_min_deg <= p.angle_max_deg, kind, "empty angle range");
        } else if constexpr (std::is_same_v<P, ZoomBlurParams>) {
          require(!p.ladder.empty(), kind, "zoom ladder is empty");
          for (double z : p.ladder) require(z > 0.0, kind, "zoom factors must be positive");
        } else if constexpr (std::is_same_v<P, GaussianBlurParams>) {
          require(p.sigma > 0.0, kind, "sigma must be positive");
        } else if constexpr (std::is_same_v<P, SnowParams>) {
          require(p.stddev >= 0.0 && p.zoom > 0.0, kind, "stddev must be >= 0 and zoom positive");
          require(p.motion_length >= 1.0, kind, "motion length must be at least 1");
          require(p.angle_min_deg <= p.angle_max_deg, kind, "empty angle range");
          require(unit(p.blend), kind, "blend weight must lie in [0,1]");
        } else if constexpr (std::is_same_v<P, FrostParams>) {
          require(unit(p.image_weight) && unit(p.frost_weight), kind, "blend weights must lie in [0,1]");
        } else if constexpr (std::is_same_v<P, FogParams>) {
          require(unit(p.alpha) && unit(p.haze_level), kind, "blend weight and haze level must lie in [0,1]");
          require(p.wibble_decay > 1.0, kind, "wibble_decay must exceed 1");
        } else if constexpr (std::is_same_v<P, BrightnessParams>) {
          require(p.offset >= -1.0 && p.offset <= 1.0, kind, "offset must lie in [-1,1]");
        } else if constexpr (std::is_same_v<P, SpatterParams>) {
          require(p.stddev >= 0.0 && p.sigma > 0.0 && p.mud_sigma > 0.0, kind, "invalid noise or blur parameters");
          require(unit(p.strength), kind, "strength must lie in [0,1]");
        } else if constexpr (std::is_same_v<P, ContrastParams>) {
          require(p.factor > 0.0, kind, "contrast factor must be positive");
        } else if constexpr (std::is_same_v<P, ElasticParams>) {
          require(p.amplitude >= 0.0 && p.sigma >= 0.0 && p.affine >= 0.0, kind, "parameters must be >= 0");
        } else if constexpr (std::is_same_v<P, JpegParams>) {
          require(p.quality >= 1 && p.quality <= 100, kind, "quality must lie in [1,100]");
        } else if constexpr (std::is_same_v<P, PixelateParams>) {
          require(p.shrink > 0.0 && p.shrink <= 1.0, kind, "shrink fraction must lie in (0,1]");
        } else if constexpr (std::is_same_v<P, SaturateParams>) {
          require(p.scale >= 0.0, kind, "saturation scale must be >= 0");
          require(p.offset >= -1.0 && p.offset <= 1.0, kind, "saturation offset must lie in [-1,1]");
        }
      },
      params);
}

inline void check_spec(const CorruptionSpec& spec) {
  check_severity(spec.severity);
  if (static_cast<std::size_t>(spec.kind) >= kCorruptionCount) throw InvalidArgument("unknown corruption kind");
  if (spec.params.index() != static_cast<std::size_t>(spec.kind))
    throw InvalidArgument("parameter record does not match corruption kind " + std::string(name(spec.kind)));
  check_params(spec.params);
}

}  // namespace leafc
