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
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "leafc/corrupt/blur.hpp"
#include "leafc/corrupt/params.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/codec.hpp"
#include "leafc/image/color.hpp"
#include "leafc/image/kernel.hpp"
#include "leafc/image/plasma.hpp"
#include "leafc/image/quantize.hpp"
#include "leafc/image/resize.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

/// Read-only set of frost textures, loaded once and shared between workers.
class FrostBank {
 public:
  FrostBank() = default;
  explicit FrostBank(std::vector<ImageBuffer> textures) : textures_(std::move(textures)) {}

  /// Loads every PNG/JPEG in `dir`, in lexicographic filename order.
  static FrostBank load(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
      throw AssetNotFound("frost texture directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      auto ext = entry.path().extension().string();
      std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
      if (ext == ".png" || ext == ".jpg" || ext == ".jpeg") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw AssetNotFound("no frost textures in " + dir.string());
    std::vector<ImageBuffer> textures;
    for (const auto& f : files) {
      try {
        textures.push_back(dequantize(load_image(f)));
      } catch (const IoError& e) {
        throw AssetNotFound(std::string("unreadable frost texture: ") + e.what());
      }
    }
    return FrostBank(std::move(textures));
  }

  bool empty() const noexcept { return textures_.empty(); }
  std::size_t size() const noexcept { return textures_.size(); }
  const ImageBuffer& operator[](std::size_t i) const { return textures_.at(i); }

 private:
  std::vector<ImageBuffer> textures_;
};

/// Haze blend: out = (1 - alpha) x + alpha H, with H = haze_level (1 + p) / 2 for a plasma field p,
/// so the haze always sits in the upper half of the haze range.
inline ImageBuffer corrupt(const ImageBuffer& img, const FogParams& p, Rng& rng) {
  check_params(p);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const Field field = plasma_fractal(std::max({w, h, std::size_t{2}}), p.wibble_decay, rng);
  if (p.alpha == 0.0) return img;
  const std::size_t ox = (field.width() - w) / 2;
  const std::size_t oy = (field.height() - h) / 2;
  ImageBuffer out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double haze = p.haze_level * (1.0 + field.at(x + ox, y + oy)) / 2.0;
      for (std::size_t c = 0; c < 3; ++c)
        out.at(x, y, c) = static_cast<float>((1.0 - p.alpha) * img.at(x, y, c) + p.alpha * haze);
    }
  }
  clamp_unit(out);
  return out;
}

/// Weighted blend with a randomly chosen, cropped and flipped frost texture.
inline ImageBuffer corrupt(const ImageBuffer& img, const FrostParams& p, Rng& rng, const FrostBank* bank) {
  check_params(p);
  if (bank == nullptr || bank->empty()) throw AssetNotFound("frost corruption requires frost textures");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const auto which = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(bank->size()) - 1));
  const ImageBuffer* texture = &(*bank)[which];
  ImageBuffer scaled;
  if (texture->width() < w || texture->height() < h) {
    const double s = std::max(static_cast<double>(w) / static_cast<double>(texture->width()),
                              static_cast<double>(h) / static_cast<double>(texture->height()));
    const auto tw = std::max(w, static_cast<std::size_t>(std::ceil(static_cast<double>(texture->width()) * s)));
    const auto th = std::max(h, static_cast<std::size_t>(std::ceil(static_cast<double>(texture->height()) * s)));
    scaled = resize(*texture, tw, th, ResizeFilter::bilinear);
    texture = &scaled;
  }
  const auto x0 = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(texture->width() - w)));
  const auto y0 = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(texture->height() - h)));
  const bool flip_x = rng.bernoulli(0.5);
  const bool flip_y = rng.bernoulli(0.5);

  ImageBuffer out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t ty = y0 + (flip_y ? h - 1 - y : y);
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t tx = x0 + (flip_x ? w - 1 - x : x);
      for (std::size_t c = 0; c < 3; ++c)
        out.at(x, y, c) =
            static_cast<float>(p.image_weight * img.at(x, y, c) + p.frost_weight * texture->at(tx, ty, c));
    }
  }
  clamp_unit(out);
  return out;
}

/// Snow: gaussian noise layer -> zoom -> threshold -> motion blur -> additive composite (the
/// layer and its 180-degree rotation) -> whitening blend toward max(x, 1.5 luma + 0.5).
inline ImageBuffer corrupt(const ImageBuffer& img, const SnowParams& p, Rng& rng) {
  check_params(p);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  Field layer(w, h);
  for (auto& v : layer.data()) v = static_cast<float>(rng.normal(p.mean, p.stddev));
  layer = clipped_zoom(layer, p.zoom);
  for (auto& v : layer.data()) v = v < p.threshold ? 0.0f : std::min(v, 1.0f);
  const double angle = draw_angle(rng, p.angle_min_deg, p.angle_max_deg);
  layer = convolve(layer, make_kernel(KernelShape::motion_line, p.motion_length, angle));

  ImageBuffer out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double flakes = static_cast<double>(layer.at(x, y)) + layer.at(w - 1 - x, h - 1 - y);
      double rgb[3];
      for (std::size_t c = 0; c < 3; ++c) rgb[c] = std::clamp(img.at(x, y, c) + flakes, 0.0, 1.0);
      const double lifted = luma(rgb[0], rgb[1], rgb[2]) * 1.5 + 0.5;
      for (std::size_t c = 0; c < 3; ++c)
        out.at(x, y, c) = static_cast<float>(p.blend * rgb[c] + (1.0 - p.blend) * std::max(rgb[c], lifted));
    }
  }
  clamp_unit(out);
  return out;
}

/// Spatter: a smoothed gaussian noise field thresholded into droplets. Water mode lightens toward
/// a pale cyan; mud mode paints opaque brown blobs.
inline ImageBuffer corrupt(const ImageBuffer& img, const SpatterParams& p, Rng& rng) {
  check_params(p);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  Field liquid(w, h);
  for (auto& v : liquid.data()) v = static_cast<float>(rng.normal(p.mean, p.stddev));
  liquid = gaussian_filter(liquid, p.sigma);

  Field mask(w, h);
  if (!p.mud) {
    float peak = 0.0f;
    for (std::size_t i = 0; i < liquid.data().size(); ++i) {
      const float v = std::max(0.0f, liquid.data()[i] - static_cast<float>(p.threshold));
      mask.data()[i] = v;
      peak = std::max(peak, v);
    }
    if (peak > 0.0f)
      for (auto& v : mask.data()) v /= peak;
    mask = gaussian_filter(mask, 1.0);
  } else {
    for (std::size_t i = 0; i < liquid.data().size(); ++i)
      mask.data()[i] = liquid.data()[i] >= p.threshold ? 1.0f : 0.0f;
    mask = gaussian_filter(mask, p.mud_sigma);
    for (auto& v : mask.data()) v = v < 0.8f ? 0.0f : v;
  }

  static constexpr double kWater[3] = {175.0 / 255.0, 238.0 / 255.0, 238.0 / 255.0};
  static constexpr double kMud[3] = {63.0 / 255.0, 42.0 / 255.0, 20.0 / 255.0};
  ImageBuffer out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double m = p.strength * mask.at(x, y);
      for (std::size_t c = 0; c < 3; ++c) {
        const double v = img.at(x, y, c);
        out.at(x, y, c) = static_cast<float>(p.mud ? v * (1.0 - m) + kMud[c] * m : v + m * kWater[c]);
      }
    }
  }
  clamp_unit(out);
  return out;
}

}  // namespace leafc
