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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leafc/errors.hpp"

namespace leafc {

/// Row-major, channel-interleaved raster. `ImageBuffer` (float RGB in [0,1]) is the unit every
/// corruption transforms; `Field` carries single-channel intermediates such as noise layers and
/// displacement maps, which may hold values outside [0,1].
template <typename T, std::size_t Channels>
class Image {
 public:
  using value_type = T;
  static constexpr std::size_t kChannels = Channels;

  Image() = default;

  Image(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), data_(checked_size(width, height), fill) {}

  Image(std::size_t width, std::size_t height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (data_.size() != checked_size(width, height)) {
      throw InvalidArgument("image data length " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(width) + "x" +
                            std::to_string(height) + "x" + std::to_string(Channels));
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t channels() const noexcept { return Channels; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  bool empty() const noexcept { return data_.empty(); }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  T& at(std::size_t x, std::size_t y, std::size_t c = 0) noexcept {
    return data_[(y * width_ + x) * Channels + c];
  }
  const T& at(std::size_t x, std::size_t y, std::size_t c = 0) const noexcept {
    return data_[(y * width_ + x) * Channels + c];
  }

  /// Edge-replicating accessor for signed coordinates.
  const T& clamped(std::ptrdiff_t x, std::ptrdiff_t y, std::size_t c = 0) const noexcept {
    const auto cx = std::clamp<std::ptrdiff_t>(x, 0, static_cast<std::ptrdiff_t>(width_) - 1);
    const auto cy = std::clamp<std::ptrdiff_t>(y, 0, static_cast<std::ptrdiff_t>(height_) - 1);
    return at(static_cast<std::size_t>(cx), static_cast<std::size_t>(cy), c);
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static std::size_t checked_size(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) throw InvalidArgument("image dimensions must be at least 1x1");
    return width * height * Channels;
  }

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

using ImageBuffer = Image<float, 3>;
using Field = Image<float, 1>;
using Raster8 = Image<std::uint8_t, 3>;

template <std::size_t C>
void clamp_unit(Image<float, C>& img) noexcept {
  for (auto& v : img.data()) v = std::isnan(v) ? 0.0f : std::clamp(v, 0.0f, 1.0f);
}

/// True when every sample is finite and within [0,1].
template <std::size_t C>
bool in_unit_range(const Image<float, C>& img) noexcept {
  return std::all_of(img.data().begin(), img.data().end(),
                     [](float v) { return std::isfinite(v) && v >= 0.0f && v <= 1.0f; });
}

template <std::size_t C>
void validate(const Image<float, C>& img) {
  if (img.empty()) throw InvalidArgument("image is empty");
  if (!in_unit_range(img)) throw InvalidArgument("image contains values outside [0,1] or non-finite");
}

/// Extracts one channel as a field.
inline Field channel(const ImageBuffer& img, std::size_t c) {
  Field out(img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y)
    for (std::size_t x = 0; x < img.width(); ++x) out.at(x, y) = img.at(x, y, c);
  return out;
}

/// Root-mean-square difference over all samples, in 64-bit.
template <typename T, std::size_t C>
double rms_difference(const Image<T, C>& a, const Image<T, C>& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw InvalidArgument("rms_difference: dimension mismatch");
  double acc = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(da.size()));
}

}  // namespace leafc
