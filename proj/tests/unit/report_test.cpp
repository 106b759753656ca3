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

#include <gtest/gtest.h>

#include <cmath>

#include "leafc/image/codec.hpp"
#include "leafc/report/bundle.hpp"
#include "support/report_csv.hpp"
#include "support/synthetic_logs.hpp"
#include "support/temp_dir.hpp"

namespace leafc {
namespace {

RobustnessSummary synthetic_summary(std::size_t models, std::size_t corruptions, std::uint64_t seed) {
  return summarize(build_surface(testing::synthetic_log({models, corruptions, 40, 4}, seed)), "ref");
}

std::string read_text(const fs::path& p) {
  const auto b = read_file(p);
  return std::string(b.begin(), b.end());
}

TEST(Format, RoundingAndSeparators) {
  EXPECT_EQ(format_fixed(66.6666, 1), "66.7");
  EXPECT_EQ(format_fixed(2.5, 0), "3");
  EXPECT_EQ(format_fixed(-2.5, 0), "-3");
  EXPECT_EQ(format_fixed(-0.04, 1), "0.0");
  EXPECT_EQ(format_fixed(105.25, 1, NumberFormat::comma()), "105,3");
  EXPECT_EQ(NumberFormat::comma().delimiter(), ';');
  EXPECT_EQ(NumberFormat{}.delimiter(), ',');
  EXPECT_THROW(format_fixed(std::nan(""), 1), InvalidArgument);
}

TEST(MceTable, ReferenceOnlyIsAll100) {
  const auto s = synthetic_summary(1, kCorruptionCount, 1);
  const auto rows = testing::parse_rows(to_csv(emit_mce_table(s)), ',');
  ASSERT_EQ(rows.size(), 1u + 2 + 19);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"group", "row", "ref"}));
  EXPECT_EQ(rows[1][1], "Error");
  EXPECT_EQ(rows[1][2], format_fixed(100 * s.models[0].clean_error, 1));
  EXPECT_EQ(rows[2][2], "100.0");
  for (std::size_t i = 3; i < rows.size(); ++i) EXPECT_EQ(rows[i][2], "100");
  EXPECT_EQ(rows[3][0], "noise");
  EXPECT_EQ(rows[3][1], "gaussian_noise");
  EXPECT_EQ(rows.back()[0], "digital");
  EXPECT_EQ(rows.back()[1], "saturate");
}

void expect_round_trip(const RobustnessSummary& s, NumberFormat fmt) {
  for (bool relative : {false, true}) {
    const auto table = relative ? emit_relative_table(s) : emit_mce_table(s);
    const auto rows = testing::parse_rows(to_csv(table, fmt), fmt.delimiter());
    ASSERT_EQ(rows.size(), 3 + s.corruptions.size());
    for (std::size_t m = 0; m < s.models.size(); ++m) {
      const auto& model = s.models[m];
      ASSERT_EQ(rows[0][2 + m], model.name);
      EXPECT_EQ(testing::parse_cell(rows[1][2 + m], fmt.decimal).value, round_to(100 * model.clean_error, 1));
      EXPECT_EQ(testing::parse_cell(rows[2][2 + m], fmt.decimal).value,
                round_to(relative ? model.relative_mce : model.mce, 1));
      for (std::size_t c = 0; c < s.corruptions.size(); ++c) {
        const auto& score = model.at(rows[3 + c][1]);
        const auto cell = testing::parse_cell(rows[3 + c][2 + m], fmt.decimal);
        EXPECT_EQ(cell.value, round_to(relative ? score.relative_ce : score.ce, 0));
        EXPECT_EQ(cell.flagged, relative && score.relative_ce_flagged);
      }
    }
  }
}

TEST(MceTable, RoundTripsSummaryValues) {
  const auto s = synthetic_summary(2, kCorruptionCount, 3);
  expect_round_trip(s, {});
  expect_round_trip(s, NumberFormat::comma());
}

TEST(RelativeTable, FlaggedCellsAnnotated) {
  RobustnessSummary s = synthetic_summary(2, 3, 4);
  s.models[1].corruptions[0].relative_ce_flagged = true;
  s.models[1].corruptions[1].relative_ce_flagged = false;
  const auto csv = to_csv(emit_relative_table(s));
  const auto rows = testing::parse_rows(csv, ',');
  EXPECT_EQ(rows[3][3].back(), '*');
  EXPECT_NE(rows[4][3].back(), '*');
  EXPECT_EQ(rows[2][1], "Rel. mCE");
  const auto j = to_json(emit_relative_table(s));
  EXPECT_TRUE(j["rows"][2]["flagged"][1].get<bool>());
}

TEST(MceTable, IncompleteSummaryPropagatesMissingCell) {
  auto s = synthetic_summary(2, 3, 5);
  s.models[1].corruptions.pop_back();
  EXPECT_THROW(emit_mce_table(s), MissingCellError);
}

TEST(Ranking, RowsAndPrecision) {
  const auto s = synthetic_summary(2, kCorruptionCount, 6);
  const auto t = emit_ranking(s, "model1");
  ASSERT_EQ(t.entries.size(), 19u);
  const auto rows = testing::parse_rows(to_csv(t), ',');
  ASSERT_EQ(rows.size(), 20u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"rank", "corruption", "mean_f1"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][0], std::to_string(i));
    EXPECT_EQ(rows[i][2].size(), 6u);  // d.dddd
    EXPECT_EQ(testing::parse_cell(rows[i][2]).value, round_to(t.entries[i - 1].mean_macro_f1, 4));
    if (i > 1) {
      EXPECT_GE(t.entries[i - 2].mean_macro_f1, t.entries[i - 1].mean_macro_f1);
    }
  }
}

TEST(Curves, OneSeriesPerModelAndCorruption) {
  const auto s = synthetic_summary(5, kCorruptionCount, 7);
  const auto curves = emit_curves(s);
  EXPECT_EQ(curves.size(), 95u);
  EXPECT_EQ(curves[0].macro_f1, s.models[0].corruptions[0].macro_f1);
}

TEST(Curves, SvgPolylinesFollowValues) {
  std::vector<CurveSeries> series = {{"m", "fog", {0.9, 0.8, 0.7, 0.6, 0.5}}, {"m", "snow", {0.4, 0.4, 0.4, 0.4, 0.4}}};
  const auto svg = curves_svg(series, "m");
  EXPECT_EQ(svg, curves_svg(series, "m"));
  const auto first = svg.find("<polyline");
  ASSERT_NE(first, std::string::npos);
  const auto second = svg.find("<polyline", first + 1);
  ASSERT_NE(second, std::string::npos);
  auto ys = [&](std::size_t at) {
    const auto b = svg.find("points=\"", at) + 8;
    const auto e = svg.find('"', b);
    std::vector<double> out;
    std::istringstream in(svg.substr(b, e - b));
    std::string pt;
    while (in >> pt) out.push_back(std::stod(pt.substr(pt.find(',') + 1)));
    return out;
  };
  const auto a = ys(first), b = ys(second);
  ASSERT_EQ(a.size(), 5u);
  for (int i = 1; i < 5; ++i) EXPECT_GT(a[i], a[i - 1]);  // falling F1 is rising SVG y
  for (int i = 1; i < 5; ++i) EXPECT_EQ(b[i], b[0]);
}

TEST(Pareto, ReferencePoint) {
  const auto s = synthetic_summary(3, 4, 8);
  const auto pts = emit_pareto(s);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].model, "ref");
  EXPECT_DOUBLE_EQ(pts[0].clean_accuracy, 100 * (1 - s.models[0].clean_error));
  EXPECT_EQ(pts[0].mce, 100.0);
  EXPECT_EQ(pts[0].relative_mce, 100.0);
  const auto svg = pareto_svg(pts);
  EXPECT_NE(svg.find(kMceColor), std::string::npos);
  EXPECT_NE(svg.find(kRelativeMceColor), std::string::npos);
}

TEST(WriteReport, FileSetAndDeterministicBytes) {
  const auto s = synthetic_summary(3, kCorruptionCount, 9);
  testing::TempDir a, b;
  const auto files = write_report(build_report(s), a.path());
  write_report(build_report(s), b.path());
  const std::vector<std::string> expected = {
      "ranking_ref.csv",   "ranking_model1.csv", "ranking_model2.csv", "mce_table.csv",     "mce_table.json",
      "relative_table.csv", "relative_table.json", "curves.json",       "curves_ref.svg",    "curves_model1.svg",
      "curves_model2.svg", "pareto.json",        "pareto.svg",         "report_manifest.json"};
  EXPECT_EQ(files, expected);
  for (const auto& f : files) EXPECT_EQ(read_file(a / f), read_file(b / f)) << f;
  const auto manifest = nlohmann::json::parse(read_text(a / "report_manifest.json"));
  EXPECT_EQ(manifest["reference_model"], "ref");
  EXPECT_EQ(manifest["decimal_separator"], ".");
}

TEST(WriteReport, CommaDecimalsSwitchSeparators) {
  const auto s = synthetic_summary(2, 2, 10);
  testing::TempDir dir;
  write_report(build_report(s), dir.path(), NumberFormat::comma());
  const auto text = read_text(dir / "mce_table.csv");
  EXPECT_EQ(text.rfind("group;row;ref;model1\n", 0), 0u);
  EXPECT_NE(text.find("summary;Error;"), std::string::npos);
  EXPECT_EQ(text.find('.'), std::string::npos);
}

}  // namespace
}  // namespace leafc
