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

#include <string>
#include <type_traits>
#include <variant>

#include "leafc/corrupt/blur.hpp"
#include "leafc/corrupt/digital.hpp"
#include "leafc/corrupt/kind.hpp"
#include "leafc/corrupt/noise.hpp"
#include "leafc/corrupt/params.hpp"
#include "leafc/corrupt/photometric.hpp"
#include "leafc/corrupt/weather.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

namespace detail {

inline ImageBuffer dispatch(const ImageBuffer& img, const CorruptionParams& params, Rng& rng, const FrostBank* frost) {
  return std::visit(
      [&](const auto& p) -> ImageBuffer {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FrostParams>) {
          return corrupt(img, p, rng, frost);
        } else if constexpr (requires { corrupt(img, p); }) {
          return corrupt(img, p);
        } else {
          return corrupt(img, p, rng);
        }
      },
      params);
}

inline ImageBuffer apply_in_group(CorruptionGroup group, const char* op, const ImageBuffer& img,
                                  const CorruptionParams& params, Rng& rng, const FrostBank* frost = nullptr) {
  const auto kind = static_cast<CorruptionKind>(params.index());
  if (group_of(kind) != group)
    throw InvalidArgument(std::string(op) + ": '" + std::string(name(kind)) + "' is not a " +
                          std::string(name(group)) + " corruption");
  validate(img);
  return dispatch(img, params, rng, frost);
}

}  // namespace detail

/// Applies one corruption at one severity. The output has the input's dimensions and lies in
/// [0,1]; it depends only on (img, spec, rng's seed). Frost needs a texture bank.
inline ImageBuffer apply_corruption(const ImageBuffer& img, const CorruptionSpec& spec, Rng rng,
                                    const FrostBank* frost = nullptr) {
  check_spec(spec);
  validate(img);
  return detail::dispatch(img, spec.params, rng, frost);
}

inline ImageBuffer apply_noise(const ImageBuffer& img, const CorruptionParams& params, Rng& rng) {
  return detail::apply_in_group(CorruptionGroup::noise, "apply_noise", img, params, rng);
}

inline ImageBuffer apply_blur(const ImageBuffer& img, const CorruptionParams& params, Rng& rng) {
  return detail::apply_in_group(CorruptionGroup::blur, "apply_blur", img, params, rng);
}

/// Snow, frost, fog and spatter. Brightness sits in the weather block of the tables but is a
/// photometric transform; use apply_photometric for it.
inline ImageBuffer apply_weather(const ImageBuffer& img, const CorruptionParams& params, Rng& rng,
                                 const FrostBank* frost = nullptr) {
  if (std::holds_alternative<BrightnessParams>(params))
    throw InvalidArgument("apply_weather: brightness is a photometric corruption");
  return detail::apply_in_group(CorruptionGroup::weather, "apply_weather", img, params, rng, frost);
}

inline ImageBuffer apply_photometric(const ImageBuffer& img, const CorruptionParams& params) {
  validate(img);
  if (const auto* b = std::get_if<BrightnessParams>(&params)) return corrupt(img, *b);
  if (const auto* c = std::get_if<ContrastParams>(&params)) return corrupt(img, *c);
  if (const auto* s = std::get_if<SaturateParams>(&params)) return corrupt(img, *s);
  throw InvalidArgument("apply_photometric: expected brightness, contrast or saturate parameters");
}

/// Elastic, pixelate and jpeg.
inline ImageBuffer apply_digital(const ImageBuffer& img, const CorruptionParams& params, Rng& rng) {
  if (std::holds_alternative<ContrastParams>(params) || std::holds_alternative<SaturateParams>(params))
    throw InvalidArgument("apply_digital: contrast and saturate are photometric corruptions");
  return detail::apply_in_group(CorruptionGroup::digital, "apply_digital", img, params, rng);
}

}  // namespace leafc
