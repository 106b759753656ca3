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
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafc/corrupt/kind.hpp"
#include "leafc/errors.hpp"
#include "leafc/metrics/records.hpp"
#include "leafc/metrics/scores.hpp"

namespace leafc {

inline constexpr int kSummaryFormatVersion = 1;

/// Top-1 error and macro-F1 for every (model, corruption, severity) cell seen in a log.
/// Clean cells use corruption "clean" and severity 0.
struct ErrorSurface {
  Split split = Split::all;
  std::vector<std::string> models;       ///< sorted
  std::vector<std::string> corruptions;  ///< canonical order
  std::vector<std::string> classes;
  std::map<GridCell, double> error;
  std::map<GridCell, double> macro_f1;
  std::map<GridCell, std::size_t> support;

  bool has(const GridCell& cell) const { return error.count(cell) != 0; }

  /// Cells required for a complete grid that have no records.
  std::vector<GridCell> missing_cells() const {
    std::vector<GridCell> missing;
    for (const auto& m : models) {
      if (!has({m, std::string(kCleanToken), 0})) missing.push_back({m, std::string(kCleanToken), 0});
      for (const auto& c : corruptions)
        for (int s = kMinSeverity; s <= kMaxSeverity; ++s)
          if (!has({m, c, s})) missing.push_back({m, c, s});
    }
    return missing;
  }
};

inline bool keep_split(Split record, Split filter) noexcept { return filter == Split::all || record == filter; }

inline ErrorSurface build_surface(const PredictionLog& log, Split filter = Split::all) {
  std::map<GridCell, std::vector<const PredictionRecord*>> cells;
  std::set<std::string> models;
  std::set<CorruptionKind> kinds;
  for (const auto& r : log.records) {
    if (!keep_split(r.split, filter)) continue;
    cells[{r.model, r.corruption, r.severity}].push_back(&r);
    models.insert(r.model);
    if (auto k = parse_kind(r.corruption)) kinds.insert(*k);
  }
  ErrorSurface surface;
  surface.split = filter;
  surface.models.assign(models.begin(), models.end());
  for (auto k : kinds) surface.corruptions.emplace_back(name(k));
  surface.classes = log.classes;
  for (const auto& [cell, recs] : cells) {
    surface.error[cell] = top1_error(recs, cell);
    surface.macro_f1[cell] = macro_f1(recs, surface.classes, cell);
    surface.support[cell] = recs.size();
  }
  return surface;
}

struct CorruptionScore {
  std::string corruption;
  SeverityErrors errors{};
  std::array<double, kMaxSeverity> macro_f1{};
  double ce = 0.0;
  double relative_ce = 0.0;
  bool relative_ce_flagged = false;

  double mean_macro_f1() const {
    double sum = 0.0;
    for (double f : macro_f1) sum += f;
    return sum / static_cast<double>(macro_f1.size());
  }
};

struct ModelSummary {
  std::string name;
  double clean_error = 0.0;
  double clean_macro_f1 = 0.0;
  double mce = 0.0;
  double relative_mce = 0.0;
  std::vector<CorruptionScore> corruptions;  ///< canonical order

  const CorruptionScore& at(const std::string& corruption) const {
    for (const auto& c : corruptions)
      if (c.corruption == corruption) return c;
    throw MissingCellError({{name, corruption, kMinSeverity}});
  }
};

struct RobustnessSummary {
  int format_version = kSummaryFormatVersion;
  std::string reference_model;
  Split split = Split::all;
  std::vector<std::string> classes;
  std::vector<std::string> corruptions;
  std::vector<ModelSummary> models;  ///< reference first, then by name
  std::vector<std::string> warnings;
  nlohmann::ordered_json run_config = nlohmann::ordered_json::object();

  const ModelSummary& model(const std::string& model_name) const {
    for (const auto& m : models)
      if (m.name == model_name) return m;
    throw InvalidArgument("model '" + model_name + "' not in summary");
  }
};

/// Computes CE, relative CE and their means for every model against `reference_model`.
inline RobustnessSummary summarize(const ErrorSurface& surface, const std::string& reference_model) {
  if (!std::count(surface.models.begin(), surface.models.end(), reference_model))
    throw ValidationError("reference model '" + reference_model + "' has no records");
  if (surface.corruptions.empty()) throw ValidationError("logs contain no corrupted records");
  if (auto missing = surface.missing_cells(); !missing.empty()) throw MissingCellError(std::move(missing));

  const std::string clean(kCleanToken);
  auto errors_of = [&](const std::string& m, const std::string& c) {
    SeverityErrors e{};
    for (int s = kMinSeverity; s <= kMaxSeverity; ++s) e[s - 1] = surface.error.at({m, c, s});
    return e;
  };

  RobustnessSummary out;
  out.reference_model = reference_model;
  out.split = surface.split;
  out.classes = surface.classes;
  out.corruptions = surface.corruptions;

  std::vector<std::string> order{reference_model};
  for (const auto& m : surface.models)
    if (m != reference_model) order.push_back(m);

  const double ref_clean = surface.error.at({reference_model, clean, 0});
  std::set<std::string> flagged;
  for (const auto& m : order) {
    ModelSummary ms;
    ms.name = m;
    ms.clean_error = surface.error.at({m, clean, 0});
    ms.clean_macro_f1 = surface.macro_f1.at({m, clean, 0});
    for (const auto& c : surface.corruptions) {
      CorruptionScore cs;
      cs.corruption = c;
      cs.errors = errors_of(m, c);
      for (int s = kMinSeverity; s <= kMaxSeverity; ++s) cs.macro_f1[s - 1] = surface.macro_f1.at({m, c, s});
      const auto ref = errors_of(reference_model, c);
      cs.ce = corruption_error(cs.errors, ref, c);
      auto rel = relative_corruption_error(cs.errors, ms.clean_error, ref, ref_clean, c);
      cs.relative_ce = rel.value;
      cs.relative_ce_flagged = rel.flagged;
      if (rel.flagged) flagged.insert(c);
      ms.mce += cs.ce;
      ms.relative_mce += cs.relative_ce;
      ms.corruptions.push_back(std::move(cs));
    }
    ms.mce /= static_cast<double>(surface.corruptions.size());
    ms.relative_mce /= static_cast<double>(surface.corruptions.size());
    out.models.push_back(std::move(ms));
  }
  for (const auto& c : surface.corruptions)
    if (flagged.count(c))
      out.warnings.push_back("reference model '" + reference_model + "' improves over its clean error under '" +
                             c + "'; relative CE values for this corruption are flagged");
  return out;
}

struct RankEntry {
  int rank = 0;
  std::string corruption;
  double mean_macro_f1 = 0.0;
};

/// Corruptions ordered from least to most damaging by mean macro-F1 over severities.
inline std::vector<RankEntry> rank_corruptions(const RobustnessSummary& summary, const std::string& model_name) {
  const auto& m = summary.model(model_name);
  std::vector<RankEntry> ranking;
  for (const auto& c : m.corruptions) ranking.push_back({0, c.corruption, c.mean_macro_f1()});
  std::sort(ranking.begin(), ranking.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.mean_macro_f1 != b.mean_macro_f1) return a.mean_macro_f1 > b.mean_macro_f1;
    return a.corruption < b.corruption;
  });
  for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i].rank = static_cast<int>(i + 1);
  return ranking;
}

inline nlohmann::ordered_json to_json(const RobustnessSummary& s) {
  using nlohmann::ordered_json;
  ordered_json models = ordered_json::array();
  for (const auto& m : s.models) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : m.corruptions)
      cs.push_back({{"corruption", c.corruption},
                    {"errors", c.errors},
                    {"macro_f1", c.macro_f1},
                    {"ce", c.ce},
                    {"relative_ce", c.relative_ce},
                    {"relative_ce_flagged", c.relative_ce_flagged}});
    models.push_back({{"name", m.name},
                      {"clean_error", m.clean_error},
                      {"clean_macro_f1", m.clean_macro_f1},
                      {"mce", m.mce},
                      {"relative_mce", m.relative_mce},
                      {"corruptions", std::move(cs)}});
  }
  return {{"format_version", s.format_version},
          {"reference_model", s.reference_model},
          {"split", std::string(name(s.split))},
          {"classes", s.classes},
          {"corruptions", s.corruptions},
          {"models", std::move(models)},
          {"warnings", s.warnings},
          {"run_config", s.run_config}};
}

/// Parses a summary document; any structural problem raises ValidationError.
inline RobustnessSummary summary_from_json(const nlohmann::ordered_json& j) {
  RobustnessSummary s;
  try {
    s.format_version = j.at("format_version").get<int>();
    if (s.format_version != kSummaryFormatVersion)
      throw ValidationError("unsupported summary format_version " + std::to_string(s.format_version));
    s.reference_model = j.at("reference_model").get<std::string>();
    auto split = parse_split(j.at("split").get<std::string>());
    if (!split) throw ValidationError("unknown split in summary");
    s.split = *split;
    s.classes = j.at("classes").get<std::vector<std::string>>();
    s.corruptions = j.at("corruptions").get<std::vector<std::string>>();
    for (const auto& c : s.corruptions)
      if (!parse_kind(c)) throw ValidationError("unknown corruption '" + c + "' in summary");
    for (const auto& jm : j.at("models")) {
      ModelSummary m;
      m.name = jm.at("name").get<std::string>();
      m.clean_error = jm.at("clean_error").get<double>();
      m.clean_macro_f1 = jm.at("clean_macro_f1").get<double>();
      m.mce = jm.at("mce").get<double>();
      m.relative_mce = jm.at("relative_mce").get<double>();
      for (const auto& jc : jm.at("corruptions")) {
        CorruptionScore c;
        c.corruption = jc.at("corruption").get<std::string>();
        c.errors = jc.at("errors").get<SeverityErrors>();
        c.macro_f1 = jc.at("macro_f1").get<std::array<double, kMaxSeverity>>();
        c.ce = jc.at("ce").get<double>();
        c.relative_ce = jc.at("relative_ce").get<double>();
        c.relative_ce_flagged = jc.at("relative_ce_flagged").get<bool>();
        m.corruptions.push_back(std::move(c));
      }
      s.models.push_back(std::move(m));
    }
    if (j.contains("warnings")) s.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("run_config")) s.run_config = j.at("run_config");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed summary: ") + e.what());
  }
  if (s.models.empty()) throw ValidationError("summary lists no models");
  if (s.models.front().name != s.reference_model)
    throw ValidationError("summary must list the reference model first");
  std::vector<GridCell> missing;
  for (const auto& m : s.models) {
    for (std::size_t i = 0; i < s.corruptions.size(); ++i)
      if (i >= m.corruptions.size() || m.corruptions[i].corruption != s.corruptions[i])
        missing.push_back({m.name, s.corruptions[i], kMinSeverity});
    if (m.corruptions.size() > s.corruptions.size())
      throw ValidationError("model '" + m.name + "' lists corruptions outside the summary grid");
  }
  if (!missing.empty()) throw MissingCellError(std::move(missing));
  return s;
}

}  // namespace leafc
