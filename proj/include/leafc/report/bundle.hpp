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

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafc/errors.hpp"
#include "leafc/metrics/summary.hpp"
#include "leafc/report/charts.hpp"
#include "leafc/report/format.hpp"
#include "leafc/report/tables.hpp"
#include "leafc/version.hpp"

namespace leafc {

inline constexpr int kReportFormatVersion = 1;

/// Everything a report directory contains, as data.
struct ReportBundle {
  int format_version = kReportFormatVersion;
  std::string reference_model;
  Split split = Split::all;
  std::vector<RankingTable> rankings;  ///< one per model, summary order
  MetricTable mce_table;
  MetricTable relative_table;
  std::vector<CurveSeries> curves;
  std::vector<ParetoPoint> pareto;
  std::vector<std::string> warnings;
  nlohmann::ordered_json run_config = nlohmann::ordered_json::object();
};

inline ReportBundle build_report(const RobustnessSummary& s) {
  ReportBundle b;
  b.reference_model = s.reference_model;
  b.split = s.split;
  for (const auto& m : s.models) b.rankings.push_back(emit_ranking(s, m.name));
  b.mce_table = emit_mce_table(s);
  b.relative_table = emit_relative_table(s);
  b.curves = emit_curves(s);
  b.pareto = emit_pareto(s);
  b.warnings = s.warnings;
  b.run_config = s.run_config;
  return b;
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace detail

/// Writes the bundle under `dir` and returns the file names in write order. Output bytes are a
/// pure function of the bundle and `fmt`.
inline std::vector<std::string> write_report(const ReportBundle& b, const std::filesystem::path& dir,
                                             NumberFormat fmt = {}) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create report directory " + dir.string() + ": " + ec.message());
  std::vector<std::string> files;
  auto emit = [&](const std::string& file, const std::string& text) {
    detail::write_text(dir / file, text);
    files.push_back(file);
  };
  auto dump = [](const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; };

  for (const auto& r : b.rankings) emit("ranking_" + r.model + ".csv", to_csv(r, fmt));
  emit("mce_table.csv", to_csv(b.mce_table, fmt));
  emit("mce_table.json", dump(to_json(b.mce_table)));
  emit("relative_table.csv", to_csv(b.relative_table, fmt));
  emit("relative_table.json", dump(to_json(b.relative_table)));
  emit("curves.json", dump(curves_to_json(b.curves)));
  for (const auto& r : b.rankings) emit("curves_" + r.model + ".svg", curves_svg(b.curves, r.model));
  emit("pareto.json", dump(pareto_to_json(b.pareto)));
  emit("pareto.svg", pareto_svg(b.pareto));

  nlohmann::ordered_json manifest = {{"format_version", b.format_version},
                                     {"tool", kToolName},
                                     {"tool_version", kToolVersion},
                                     {"reference_model", b.reference_model},
                                     {"split", std::string(name(b.split))},
                                     {"decimal_separator", std::string(1, fmt.decimal)},
                                     {"field_delimiter", std::string(1, fmt.delimiter())},
                                     {"warnings", b.warnings},
                                     {"run_config", b.run_config},
                                     {"files", files}};
  emit("report_manifest.json", dump(manifest));
  return files;
}

}  // namespace leafc
