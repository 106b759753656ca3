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
#include <bit>
#include <cstddef>
#include <vector>

#include "leafc/errors.hpp"
#include "leafc/image/buffer.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

/// Diamond-square midpoint displacement on a (2^k + 1)^2 grid, normalized to [0,1].
///
/// Displacement at each level is wibble * U(-wibble, wibble) with wibble starting at 100 and
/// divided by `wibble_decay` per level, so larger decays give smoother fields. A `size` that is
/// not 2^k + 1 is generated at the next such size and center-cropped before normalization.
inline Field plasma_fractal(std::size_t size, double wibble_decay, Rng& rng) {
  if (size < 2) throw InvalidArgument("plasma_fractal size must be at least 2");
  if (!(wibble_decay > 1.0)) throw InvalidArgument("plasma_fractal wibble_decay must exceed 1");

  const std::size_t span = std::bit_ceil(size - 1);  // grid side = span + 1 >= size
  const std::size_t n = span + 1;
  std::vector<double> grid(n * n, 0.0);
  auto cell = [&](std::size_t x, std::size_t y) -> double& { return grid[y * n + x]; };

  double wibble = 100.0;
  auto displace = [&] { return wibble * rng.uniform(-wibble, wibble); };

  cell(0, 0) = displace();
  cell(span, 0) = displace();
  cell(0, span) = displace();
  cell(span, span) = displace();

  for (std::size_t step = span; step > 1; step /= 2) {
    const std::size_t half = step / 2;
    // Diamond step: square centers.
    for (std::size_t y = half; y < n; y += step)
      for (std::size_t x = half; x < n; x += step)
        cell(x, y) = (cell(x - half, y - half) + cell(x + half, y - half) + cell(x - half, y + half) +
                      cell(x + half, y + half)) / 4.0 + displace();
    // Square step: edge midpoints, averaging the neighbors that exist.
    for (std::size_t y = 0; y < n; y += half) {
      for (std::size_t x = (y / half) % 2 == 0 ? half : 0; x < n; x += step) {
        double acc = 0.0;
        int count = 0;
        if (x >= half) { acc += cell(x - half, y); ++count; }
        if (x + half < n) { acc += cell(x + half, y); ++count; }
        if (y >= half) { acc += cell(x, y - half); ++count; }
        if (y + half < n) { acc += cell(x, y + half); ++count; }
        cell(x, y) = acc / count + displace();
      }
    }
    wibble /= wibble_decay;
  }

  const std::size_t off = (n - size) / 2;
  Field out(size, size);
  double lo = cell(off, off);
  double hi = lo;
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      const double v = cell(x + off, y + off);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double range = hi - lo;
  for (std::size_t y = 0; y < size; ++y)
    for (std::size_t x = 0; x < size; ++x)
      out.at(x, y) = range > 0.0 ? static_cast<float>((cell(x + off, y + off) - lo) / range) : 0.0f;
  return out;
}

}  // namespace leafc
