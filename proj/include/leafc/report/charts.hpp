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
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafc/metrics/summary.hpp"
#include "leafc/report/format.hpp"
#include "leafc/report/svg.hpp"

namespace leafc {

struct CurveSeries {
  std::string model;
  std::string corruption;
  std::array<double, kMaxSeverity> macro_f1{};  ///< severities 1..5
};

/// One macro-F1-vs-severity series per (model, corruption).
inline std::vector<CurveSeries> emit_curves(const RobustnessSummary& s) {
  std::vector<CurveSeries> out;
  for (const auto& m : s.models)
    for (const auto& c : s.corruptions) out.push_back({m.name, c, m.at(c).macro_f1});
  return out;
}

inline nlohmann::ordered_json curves_to_json(const std::vector<CurveSeries>& series) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : series)
    arr.push_back({{"model", c.model},
                   {"corruption", c.corruption},
                   {"severities", {1, 2, 3, 4, 5}},
                   {"macro_f1", c.macro_f1}});
  return {{"series", std::move(arr)}};
}

inline constexpr std::array<const char*, 19> kSeriesPalette = {
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c", "#98df8a", "#d62728", "#ff9896", "#9467bd", "#c5b0d5",
    "#8c564b", "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f", "#bcbd22", "#dbdb8d", "#17becf", "#9edae5"};

/// Line chart of every corruption's series for one model.
inline std::string curves_svg(const std::vector<CurveSeries>& series, const std::string& model) {
  constexpr int W = 680, H = 440;
  constexpr double left = 60, right = 500, top = 40, bottom = 390;
  svg::Document doc(W, H);
  svg::Axis x{1, 5, left, right}, y{0, 1, bottom, top};
  doc.text(W / 2.0, 22, "Macro F1 vs. corruption severity: " + model, 14, "middle");
  for (int i = 0; i <= 4; ++i) {
    const double v = i * 0.25;
    doc.line(left, y(v), right, y(v), "#dddddd");
    doc.text(left - 6, y(v) + 4, svg::num(v), 10, "end");
  }
  for (int s = 1; s <= 5; ++s) {
    doc.line(x(s), bottom, x(s), bottom + 4, "#000000");
    doc.text(x(s), bottom + 16, std::to_string(s), 10, "middle");
  }
  doc.line(left, bottom, right, bottom, "#000000");
  doc.line(left, top, left, bottom, "#000000");
  doc.text((left + right) / 2, H - 14, "Severity", 12, "middle");
  doc.text(16, (top + bottom) / 2, "Macro F1", 12, "middle");
  std::size_t k = 0;
  for (const auto& c : series) {
    if (c.model != model) continue;
    const char* color = kSeriesPalette[k % kSeriesPalette.size()];
    std::vector<std::pair<double, double>> pts;
    for (int s = 1; s <= 5; ++s) pts.emplace_back(x(s), y(c.macro_f1[s - 1]));
    doc.polyline(pts, color);
    const double ly = top + 6 + 18.0 * static_cast<double>(k);
    doc.line(right + 16, ly, right + 36, ly, color, 3);
    doc.text(right + 42, ly + 4, c.corruption, 10);
    ++k;
  }
  return doc.str();
}

struct ParetoPoint {
  std::string model;
  double clean_accuracy = 0.0;  ///< percent
  double mce = 0.0;
  double relative_mce = 0.0;
};

inline std::vector<ParetoPoint> emit_pareto(const RobustnessSummary& s) {
  std::vector<ParetoPoint> out;
  for (const auto& m : s.models) out.push_back({m.name, 100.0 * (1.0 - m.clean_error), m.mce, m.relative_mce});
  return out;
}

inline nlohmann::ordered_json pareto_to_json(const std::vector<ParetoPoint>& pts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pts)
    arr.push_back({{"model", p.model},
                   {"clean_accuracy", p.clean_accuracy},
                   {"mce", p.mce},
                   {"relative_mce", p.relative_mce}});
  return {{"points", std::move(arr)}};
}

inline constexpr const char* kMceColor = "#1f77b4";
inline constexpr const char* kRelativeMceColor = "#ff7f0e";

/// Clean accuracy against mCE (blue) and relative mCE (orange).
inline std::string pareto_svg(const std::vector<ParetoPoint>& pts) {
  constexpr int W = 640, H = 440;
  constexpr double left = 70, right = 600, top = 50, bottom = 380;
  double xlo = 100, xhi = 0, ymin = 0, ymax = 0;
  for (const auto& p : pts) {
    xlo = std::min(xlo, p.clean_accuracy);
    xhi = std::max(xhi, p.clean_accuracy);
    ymin = std::min({ymin, p.mce, p.relative_mce});
    ymax = std::max({ymax, p.mce, p.relative_mce});
  }
  xlo = std::max(0.0, std::floor((xlo - 5) / 10) * 10);
  xhi = std::min(100.0, std::ceil((xhi + 5) / 10) * 10);
  if (xhi <= xlo) xhi = xlo + 10;
  const double ystep = 50;
  ymin = std::floor(ymin / ystep) * ystep;
  ymax = std::max(ymin + ystep, std::ceil(ymax * 1.1 / ystep) * ystep);
  svg::Document doc(W, H);
  svg::Axis x{xlo, xhi, left, right}, y{ymin, ymax, bottom, top};
  doc.text(W / 2.0, 22, "Clean accuracy vs. mCE", 14, "middle");
  for (double v = ymin; v <= ymax + 1e-9; v += ystep) {
    doc.line(left, y(v), right, y(v), "#dddddd");
    doc.text(left - 6, y(v) + 4, svg::num(v), 10, "end");
  }
  for (double v = xlo; v <= xhi + 1e-9; v += 10) {
    doc.line(x(v), bottom, x(v), bottom + 4, "#000000");
    doc.text(x(v), bottom + 16, svg::num(v), 10, "middle");
  }
  doc.line(left, bottom, right, bottom, "#000000");
  doc.line(left, top, left, bottom, "#000000");
  doc.text((left + right) / 2, H - 14, "Clean accuracy (%)", 12, "middle");
  doc.text(18, (top + bottom) / 2, "mCE", 12, "middle");
  for (const auto& p : pts) {
    doc.circle(x(p.clean_accuracy), y(p.mce), 5, kMceColor);
    doc.circle(x(p.clean_accuracy), y(p.relative_mce), 5, kRelativeMceColor);
    doc.text(x(p.clean_accuracy) + 8, y(p.mce) - 6, p.model, 10);
  }
  doc.circle(left + 12, top - 14, 5, kMceColor);
  doc.text(left + 22, top - 10, "mCE", 11);
  doc.circle(left + 82, top - 14, 5, kRelativeMceColor);
  doc.text(left + 92, top - 10, "relative mCE", 11);
  return doc.str();
}

}  // namespace leafc
