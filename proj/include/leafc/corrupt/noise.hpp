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

#include "leafc/corrupt/params.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

// Additive, signal-dependent and impulsive noise. Samples are drawn in buffer order, one stream
// per image, so results depend only on the seed.

inline ImageBuffer corrupt(const ImageBuffer& img, const GaussianNoiseParams& p, Rng& rng) {
  check_params(p);
  ImageBuffer out = img;
  if (p.sigma == 0.0) return out;
  for (auto& v : out.data()) v = static_cast<float>(v + rng.normal(0.0, p.sigma));
  clamp_unit(out);
  return out;
}

inline ImageBuffer corrupt(const ImageBuffer& img, const ShotNoiseParams& p, Rng& rng) {
  check_params(p);
  ImageBuffer out = img;
  for (auto& v : out.data())
    v = static_cast<float>(static_cast<double>(rng.poisson(static_cast<double>(v) * p.photons)) / p.photons);
  clamp_unit(out);
  return out;
}

inline ImageBuffer corrupt(const ImageBuffer& img, const ImpulseNoiseParams& p, Rng& rng) {
  check_params(p);
  ImageBuffer out = img;
  if (p.amount == 0.0) return out;
  for (auto& v : out.data())
    if (rng.bernoulli(p.amount)) v = rng.bernoulli(0.5) ? 1.0f : 0.0f;
  return out;
}

inline ImageBuffer corrupt(const ImageBuffer& img, const SpeckleNoiseParams& p, Rng& rng) {
  check_params(p);
  ImageBuffer out = img;
  if (p.sigma == 0.0) return out;
  for (auto& v : out.data()) v = static_cast<float>(v + v * rng.normal(0.0, p.sigma));
  clamp_unit(out);
  return out;
}

}  // namespace leafc
