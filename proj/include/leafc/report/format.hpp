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
#include <cstdio>
#include <string>
#include <string_view>

#include "leafc/errors.hpp"

namespace leafc {

struct NumberFormat {
  char decimal = '.';

  /// Comma decimals force a semicolon field separator so cells stay unambiguous.
  char delimiter() const noexcept { return decimal == ',' ? ';' : ','; }
  static NumberFormat comma() { return {','}; }
};

/// Half-away-from-zero rounding to `decimals` places; never yields negative zero.
inline double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

inline std::string format_fixed(double v, int decimals, NumberFormat fmt = {}) {
  if (!std::isfinite(v)) throw InvalidArgument("cannot format non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, round_to(v, decimals));
  std::string s(buf);
  if (fmt.decimal != '.')
    for (auto& c : s)
      if (c == '.') c = fmt.decimal;
  return s;
}

/// Quotes a CSV field when it contains the delimiter, a quote or a line break.
inline std::string csv_field(std::string_view s, char delimiter) {
  if (s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace leafc
