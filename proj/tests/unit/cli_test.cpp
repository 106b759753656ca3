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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "leafc/cli/app.hpp"
#include "support/dataset_tree.hpp"
#include "support/synthetic_logs.hpp"
#include "support/temp_dir.hpp"

namespace leafc {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

class CliDataset : public ::testing::Test {
 protected:
  void SetUp() override { testing::write_toy_dataset(dir_ / "clean", 2, 3, 32); }
  testing::TempDir dir_;
};

TEST_F(CliDataset, CorruptBuildsFullGrid) {
  const auto r = run_cli({"corrupt", "--in", (dir_ / "clean").string(), "--out", (dir_ / "out").string(), "--seed", "7",
                          "--workers", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = read_json(dir_ / "out" / "manifest.json");
  EXPECT_EQ(m["subset_count"], 95);
  EXPECT_EQ(m["global_seed"], 7);
  EXPECT_EQ(m["status"], "complete");
  EXPECT_EQ(testing::read_tree(dir_ / "out").size(), 95u * 6);
  EXPECT_NE(r.out.find("\"seed\":7"), std::string::npos);

  const auto v = run_cli({"validate", "--dataset", (dir_ / "out").string()});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
}

TEST_F(CliDataset, CorruptSubsetSelection) {
  const auto r = run_cli({"corrupt", "--in", (dir_ / "clean").string(), "--out", (dir_ / "out").string(), "--kinds",
                          "fog,frost", "--severities", "1,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = read_json(dir_ / "out" / "manifest.json");
  EXPECT_EQ(m["subset_count"], 4);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "frost" / "5" / "class1" / "img2.png"));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "fog" / "3"));
}

TEST_F(CliDataset, UnknownKindIsValidationError) {
  const auto r = run_cli({"corrupt", "--in", (dir_ / "clean").string(), "--out", (dir_ / "out").string(), "--kinds",
                          "hail"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("hail"), std::string::npos);
}

TEST_F(CliDataset, SeverityOutOfRangeRejected) {
  const auto r = run_cli({"corrupt", "--in", (dir_ / "clean").string(), "--out", (dir_ / "out").string(),
                          "--severities", "6"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliDataset, SeedFromEnvironmentAndConfigPrecedence) {
  ::setenv("LEAFC_SEED", "11", 1);
  auto r = run_cli({"corrupt", "--in", (dir_ / "clean").string(), "--out", (dir_ / "a").string(), "--kinds", "fog",
                    "--severities", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_json(dir_ / "a" / "manifest.json")["global_seed"], 11);

  write_text(dir_ / "run.ini", "[corrupt]\nseed=5\n");
  r = run_cli({"--config", (dir_ / "run.ini").string(), "corrupt", "--in", (dir_ / "clean").string(), "--out",
               (dir_ / "b").string(), "--kinds", "fog", "--severities", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_json(dir_ / "b" / "manifest.json")["global_seed"], 5);

  r = run_cli({"--config", (dir_ / "run.ini").string(), "corrupt", "--in", (dir_ / "clean").string(), "--out",
               (dir_ / "c").string(), "--kinds", "fog", "--severities", "1", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_json(dir_ / "c" / "manifest.json")["global_seed"], 3);
  ::unsetenv("LEAFC_SEED");
}

TEST(Cli, MissingInputIsIoError) {
  testing::TempDir dir;
  const auto r = run_cli({"corrupt", "--in", (dir / "nope").string(), "--out", (dir / "out").string()});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BadFlagIsValidationError) {
  EXPECT_EQ(run_cli({"corrupt", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"--version"}).code, 0);
}

class CliLogs : public ::testing::Test {
 protected:
  void SetUp() override {
    log_ = testing::synthetic_log({2, kCorruptionCount, 30, 4}, 21);
    write_text(dir_ / "preds.csv", testing::to_log_csv(log_.records));
  }
  testing::TempDir dir_;
  PredictionLog log_;
};

TEST_F(CliLogs, EvaluateAndReport) {
  auto r = run_cli({"evaluate", "--logs", (dir_ / "preds.csv").string(), "--reference", "ref", "--out",
                    (dir_ / "summary.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = read_json(dir_ / "summary.json");
  EXPECT_EQ(summary["reference_model"], "ref");
  EXPECT_DOUBLE_EQ(summary["models"][0]["mce"].get<double>(), 100.0);
  EXPECT_NE(r.out.find("ref: clean error"), std::string::npos);

  r = run_cli({"report", "--summary", (dir_ / "summary.json").string(), "--out", (dir_ / "rep").string(),
               "--comma-decimals"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir_ / "rep" / "mce_table.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "group;row;ref;model1");
  EXPECT_TRUE(fs::exists(dir_ / "rep" / "pareto.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "rep" / "ranking_model1.csv"));
}

TEST_F(CliLogs, MissingCellExitsThree) {
  auto records = log_.records;
  std::erase_if(records, [](const PredictionRecord& r) {
    return r.model == "model1" && r.corruption == "fog" && r.severity == 4;
  });
  write_text(dir_ / "partial.csv", testing::to_log_csv(records));
  const auto r = run_cli({"evaluate", "--logs", (dir_ / "partial.csv").string(), "--reference", "ref", "--out",
                          (dir_ / "summary.json").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("fog"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "summary.json"));
}

TEST_F(CliLogs, UnknownReferenceIsValidationError) {
  const auto r = run_cli({"evaluate", "--logs", (dir_ / "preds.csv").string(), "--reference", "alexnet", "--out",
                          (dir_ / "summary.json").string()});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliLogs, ValidateReportsDuplicateLine) {
  auto text = testing::to_log_csv(log_.records);
  const auto first_row_end = text.find('\n', text.find('\n') + 1);
  text += text.substr(text.find('\n') + 1, first_row_end - text.find('\n'));
  write_text(dir_ / "dup.csv", text);
  const auto r = run_cli({"validate", "--log", (dir_ / "dup.csv").string()});
  EXPECT_EQ(r.code, 1);
  const auto lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_NE(r.out.find(":" + std::to_string(lines) + ":"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("duplicate"), std::string::npos) << r.out;

  EXPECT_EQ(run_cli({"validate", "--log", (dir_ / "preds.csv").string()}).code, 0);
}

TEST(Cli, ValidateEmptyLog) {
  testing::TempDir dir;
  write_text(dir / "empty.csv", "");
  const auto r = run_cli({"validate", "--log", (dir / "empty.csv").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("no records"), std::string::npos) << r.out;
}

TEST(Cli, MalformedSummaryRejected) {
  testing::TempDir dir;
  write_text(dir / "summary.json", "{\"format_version\": 1, \"models\": ");
  const auto r = run_cli({"report", "--summary", (dir / "summary.json").string(), "--out", (dir / "rep").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run_cli({"report", "--summary", (dir / "missing.json").string(), "--out", (dir / "rep").string()}).code, 2);
}

}  // namespace
}  // namespace leafc
