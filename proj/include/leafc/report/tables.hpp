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
#include <string>
#include <vector>

#include <json.hpp>

#include "leafc/corrupt/kind.hpp"
#include "leafc/metrics/summary.hpp"
#include "leafc/report/format.hpp"

namespace leafc {

struct TableCell {
  double value = 0.0;
  int decimals = 0;
  bool flagged = false;
};

struct TableRow {
  std::string group;  ///< "summary" or a corruption family
  std::string label;
  std::vector<TableCell> cells;
};

/// Models as columns, metrics as rows. Values are summary fields; only rounding happens here.
struct MetricTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

inline constexpr int kCeDecimals = 0;
inline constexpr int kMeanDecimals = 1;
inline constexpr int kRankingDecimals = 4;
inline constexpr char kFlagMarker = '*';

namespace detail {

inline std::vector<std::string> model_columns(const RobustnessSummary& s) {
  std::vector<std::string> cols;
  for (const auto& m : s.models) cols.push_back(m.name);
  return cols;
}

inline MetricTable corruption_table(const RobustnessSummary& s, bool relative) {
  MetricTable t;
  t.name = relative ? "relative_table" : "mce_table";
  t.columns = model_columns(s);
  TableRow err{"summary", "Error", {}};
  TableRow mean{"summary", relative ? "Rel. mCE" : "mCE", {}};
  for (const auto& m : s.models) {
    err.cells.push_back({100.0 * m.clean_error, kMeanDecimals, false});
    mean.cells.push_back({relative ? m.relative_mce : m.mce, kMeanDecimals, false});
  }
  t.rows.push_back(std::move(err));
  t.rows.push_back(std::move(mean));
  for (auto kind : kAllCorruptions) {
    const std::string c(name(kind));
    if (std::find(s.corruptions.begin(), s.corruptions.end(), c) == s.corruptions.end()) continue;
    TableRow row{std::string(name(group_of(kind))), c, {}};
    for (const auto& m : s.models) {
      const auto& score = m.at(c);
      row.cells.push_back(relative ? TableCell{score.relative_ce, kCeDecimals, score.relative_ce_flagged}
                                   : TableCell{score.ce, kCeDecimals, false});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace detail

/// Clean error, mCE and per-corruption CE, grouped by corruption family.
inline MetricTable emit_mce_table(const RobustnessSummary& s) { return detail::corruption_table(s, false); }

/// Clean error, relative mCE and per-corruption relative CE; anomalous cells carry a flag.
inline MetricTable emit_relative_table(const RobustnessSummary& s) { return detail::corruption_table(s, true); }

inline std::string to_csv(const MetricTable& t, NumberFormat fmt = {}) {
  const char d = fmt.delimiter();
  std::string out = "group" + std::string(1, d) + "row";
  for (const auto& c : t.columns) out += d + csv_field(c, d);
  out += '\n';
  for (const auto& r : t.rows) {
    out += csv_field(r.group, d) + d + csv_field(r.label, d);
    for (const auto& cell : r.cells) {
      out += d + format_fixed(cell.value, cell.decimals, fmt);
      if (cell.flagged) out += kFlagMarker;
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json(const MetricTable& t) {
  using nlohmann::ordered_json;
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json values = ordered_json::array();
    ordered_json flags = ordered_json::array();
    for (const auto& cell : r.cells) {
      values.push_back(round_to(cell.value, cell.decimals));
      flags.push_back(cell.flagged);
    }
    rows.push_back({{"group", r.group}, {"row", r.label}, {"values", std::move(values)}, {"flagged", std::move(flags)}});
  }
  return {{"table", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}};
}

struct RankingTable {
  std::string model;
  std::vector<RankEntry> entries;
};

inline RankingTable emit_ranking(const RobustnessSummary& s, const std::string& model) {
  return {model, rank_corruptions(s, model)};
}

inline std::string to_csv(const RankingTable& t, NumberFormat fmt = {}) {
  const char d = fmt.delimiter();
  std::string out = std::string("rank") + d + "corruption" + d + "mean_f1\n";
  for (const auto& e : t.entries)
    out += std::to_string(e.rank) + d + e.corruption + d + format_fixed(e.mean_macro_f1, kRankingDecimals, fmt) + '\n';
  return out;
}

}  // namespace leafc
