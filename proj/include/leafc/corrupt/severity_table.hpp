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
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "leafc/corrupt/kind.hpp"
#include "leafc/corrupt/params.hpp"
#include "leafc/errors.hpp"
#include "leafc/hash.hpp"
#include "leafc/image/codec.hpp"

namespace leafc {

/// The 19 x 5 parameter table, loaded from a key-value text file:
///
///     version = imagenet-c-adapted/1
///     gaussian_noise.1.sigma = 0.08
///     motion_blur.*.angle_min_deg = -45     # applies to every severity
///
/// '#' starts a comment. A key with a numeric severity overrides the wildcard. Every
/// (kind, severity) must resolve every field of its record; unknown keys are rejected.
/// The content hash is FNV-1a-64 over the file bytes.
class SeverityTable {
 public:
  static SeverityTable parse(std::string_view text, std::string source = "<severity table>") {
    SeverityTable table;
    table.hash_ = "fnv1a64:" + hex64(fnv1a64(text));
    RawTable raw = read_entries(text, source, table.version_);
    for (auto kind : kAllCorruptions) {
      for (int s = kMinSeverity; s <= kMaxSeverity; ++s) {
        FieldReader reader(raw, kind, s, source);
        auto params = build(kind, reader);
        try {
          check_params(params);
        } catch (const InvalidArgument& e) {
          throw ValidationError(source + ": severity " + std::to_string(s) + ": " + e.what());
        }
        table.entries_[index(kind, s)] = std::move(params);
      }
    }
    for (const auto& [key, used] : raw.used)
      if (!used) throw ValidationError(source + ": unknown key '" + key + "'");
    if (table.version_.empty()) throw ValidationError(source + ": missing 'version' entry");
    return table;
  }

  static SeverityTable load(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    return parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()), path.string());
  }

  const std::string& version() const noexcept { return version_; }
  const std::string& hash() const noexcept { return hash_; }

  const CorruptionParams& params(CorruptionKind kind, int severity) const {
    check_severity(severity);
    return entries_[index(kind, severity)];
  }

  CorruptionSpec resolve(CorruptionKind kind, int severity) const {
    return CorruptionSpec{kind, severity, params(kind, severity)};
  }

  /// The single scalar per kind that the table keeps non-decreasing in severity.
  double intensity(CorruptionKind kind, int severity) const {
    return std::visit([](const auto& p) { return intensity_of(p); }, params(kind, severity));
  }

 private:
  struct RawTable {
    std::map<std::string, std::string> values;  // "kind.sev.field" with sev in {1..5,*}
    std::map<std::string, bool> used;
  };

  static std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
  }

  static RawTable read_entries(std::string_view text, const std::string& source, std::string& version) {
    RawTable raw;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string body = trim(line);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos)
        throw ValidationError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
      const std::string key = trim(std::string_view(body).substr(0, eq));
      const std::string value = trim(std::string_view(body).substr(eq + 1));
      if (key.empty() || value.empty())
        throw ValidationError(source + ":" + std::to_string(lineno) + ": empty key or value");
      if (key == "version") {
        version = value;
        continue;
      }
      if (!raw.values.emplace(key, value).second)
        throw ValidationError(source + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
      raw.used[key] = false;
    }
    return raw;
  }

  class FieldReader {
   public:
    FieldReader(RawTable& raw, CorruptionKind kind, int severity, const std::string& source)
        : raw_(raw), kind_(kind), severity_(severity), source_(source) {}

    double real(const std::string& field) {
      const std::string text = lookup(field);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ValidationError(where(field) + ": not a number: '" + text + "'");
      return v;
    }

    int integer(const std::string& field) {
      const std::string text = lookup(field);
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size())
        throw ValidationError(where(field) + ": not an integer: '" + text + "'");
      return v;
    }

    bool flag(const std::string& field) {
      const std::string text = lookup(field);
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      throw ValidationError(where(field) + ": not a boolean: '" + text + "'");
    }

   private:
    std::string where(const std::string& field) const {
      return source_ + ": " + std::string(name(kind_)) + "." + std::to_string(severity_) + "." + field;
    }

    std::string lookup(const std::string& field) {
      const std::string base(name(kind_));
      for (const std::string& sev : {std::to_string(severity_), std::string("*")}) {
        const std::string key = base + "." + sev + "." + field;
        if (auto it = raw_.values.find(key); it != raw_.values.end()) {
          raw_.used[key] = true;
          return it->second;
        }
      }
      throw ValidationError(where(field) + ": missing entry");
    }

    RawTable& raw_;
    CorruptionKind kind_;
    int severity_;
    const std::string& source_;
  };

  static CorruptionParams build(CorruptionKind kind, FieldReader& r) {
    switch (kind) {
      case CorruptionKind::gaussian_noise: return GaussianNoiseParams{r.real("sigma")};
      case CorruptionKind::shot_noise: return ShotNoiseParams{r.real("photons")};
      case CorruptionKind::impulse_noise: return ImpulseNoiseParams{r.real("amount")};
      case CorruptionKind::speckle_noise: return SpeckleNoiseParams{r.real("sigma")};
      case CorruptionKind::defocus_blur: return DefocusBlurParams{r.real("radius")};
      case CorruptionKind::glass_blur:
        return GlassBlurParams{r.real("sigma"), r.integer("max_shift"), r.integer("iterations")};
      case CorruptionKind::motion_blur:
        return MotionBlurParams{r.real("length"), r.real("angle_min_deg"), r.real("angle_max_deg")};
      case CorruptionKind::zoom_blur: {
        const double start = r.real("zoom_start");
        const double stop = r.real("zoom_stop");
        const double step = r.real("zoom_step");
        if (!(step > 0.0) || stop < start) throw ValidationError("zoom_blur: invalid zoom ladder range");
        const auto count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        ZoomBlurParams p;
        p.ladder.clear();
        for (int i = 0; i < count; ++i) p.ladder.push_back(start + step * i);
        return p;
      }
      case CorruptionKind::gaussian_blur: return GaussianBlurParams{r.real("sigma")};
      case CorruptionKind::snow:
        return SnowParams{r.real("mean"),          r.real("stddev"),        r.real("zoom"),
                          r.real("threshold"),     r.real("motion_length"), r.real("angle_min_deg"),
                          r.real("angle_max_deg"), r.real("blend")};
      case CorruptionKind::frost: return FrostParams{r.real("image_weight"), r.real("frost_weight")};
      case CorruptionKind::fog: return FogParams{r.real("alpha"), r.real("wibble_decay"), r.real("haze_level")};
      case CorruptionKind::brightness: return BrightnessParams{r.real("offset")};
      case CorruptionKind::spatter:
        return SpatterParams{r.real("mean"),     r.real("stddev"), r.real("sigma"),     r.real("threshold"),
                             r.real("strength"), r.flag("mud"),    r.real("mud_sigma")};
      case CorruptionKind::contrast: return ContrastParams{r.real("factor")};
      case CorruptionKind::elastic: return ElasticParams{r.real("amplitude"), r.real("sigma"), r.real("affine")};
      case CorruptionKind::jpeg: return JpegParams{r.integer("quality")};
      case CorruptionKind::pixelate: return PixelateParams{r.real("shrink")};
      case CorruptionKind::saturate: return SaturateParams{r.real("scale"), r.real("offset")};
    }
    throw ValidationError("unknown corruption kind");
  }

  static double intensity_of(const GaussianNoiseParams& p) { return p.sigma; }
  static double intensity_of(const ShotNoiseParams& p) { return 1.0 / p.photons; }
  static double intensity_of(const ImpulseNoiseParams& p) { return p.amount; }
  static double intensity_of(const SpeckleNoiseParams& p) { return p.sigma; }
  static double intensity_of(const DefocusBlurParams& p) { return p.radius; }
  static double intensity_of(const GlassBlurParams& p) { return p.sigma; }
  static double intensity_of(const MotionBlurParams& p) { return p.length; }
  static double intensity_of(const ZoomBlurParams& p) { return p.ladder.back(); }
  static double intensity_of(const GaussianBlurParams& p) { return p.sigma; }
  static double intensity_of(const SnowParams& p) { return 1.0 - p.blend; }
  static double intensity_of(const FrostParams& p) { return p.frost_weight; }
  static double intensity_of(const FogParams& p) { return p.alpha; }
  static double intensity_of(const BrightnessParams& p) { return p.offset; }
  static double intensity_of(const SpatterParams& p) { return p.strength; }
  static double intensity_of(const ContrastParams& p) { return 1.0 - p.factor; }
  static double intensity_of(const ElasticParams& p) { return p.amplitude; }
  static double intensity_of(const JpegParams& p) { return 100.0 - p.quality; }
  static double intensity_of(const PixelateParams& p) { return 1.0 - p.shrink; }
  static double intensity_of(const SaturateParams& p) { return p.scale; }

  static std::size_t index(CorruptionKind kind, int severity) {
    return static_cast<std::size_t>(kind) * kMaxSeverity + static_cast<std::size_t>(severity - 1);
  }

  std::string version_;
  std::string hash_;
  std::array<CorruptionParams, kCorruptionCount * kMaxSeverity> entries_{};
};

}  // namespace leafc
