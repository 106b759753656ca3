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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "leafc/metrics/records.hpp"

namespace leafc::testing {

// From-scratch recomputation straight from the definitions: linear scans over the raw
// records, per-class F1 as 2TP / (2TP + FP + FN), sums written out term by term.
struct OracleModel {
  double clean_error = 0;
  std::map<std::string, std::vector<double>> error;     // corruption -> 5 rates
  std::map<std::string, std::vector<double>> macro_f1;  // corruption -> 5 values
  std::map<std::string, double> ce, relative_ce;
  double mce = 0, relative_mce = 0;
};

inline double oracle_error(const std::vector<PredictionRecord>& recs, const std::string& model,
                           const std::string& corruption, int severity) {
  double n = 0, wrong = 0;
  for (const auto& r : recs)
    if (r.model == model && r.corruption == corruption && r.severity == severity) {
      n += 1;
      if (r.predicted_label != r.true_label) wrong += 1;
    }
  return wrong / n;
}

inline double oracle_macro_f1(const std::vector<PredictionRecord>& recs, const std::vector<std::string>& classes,
                              const std::string& model, const std::string& corruption, int severity) {
  double total = 0;
  for (const auto& k : classes) {
    double tp = 0, fp = 0, fn = 0;
    for (const auto& r : recs) {
      if (r.model != model || r.corruption != corruption || r.severity != severity) continue;
      if (r.true_label == k && r.predicted_label == k) tp += 1;
      else if (r.predicted_label == k) fp += 1;
      else if (r.true_label == k) fn += 1;
    }
    total += (2 * tp + fp + fn) > 0 ? 2 * tp / (2 * tp + fp + fn) : 0.0;
  }
  return total / static_cast<double>(classes.size());
}

inline std::map<std::string, OracleModel> oracle_summary(const PredictionLog& log,
                                                         const std::vector<std::string>& models,
                                                         const std::vector<std::string>& corruptions,
                                                         const std::string& reference) {
  // Bucketing only narrows each scan; the per-cell functions still filter on their own.
  std::map<std::tuple<std::string, std::string, int>, std::vector<PredictionRecord>> cells;
  for (const auto& r : log.records) cells[{r.model, r.corruption, r.severity}].push_back(r);
  auto cell = [&](const std::string& m, const std::string& c, int s) -> const std::vector<PredictionRecord>& {
    return cells[{m, c, s}];
  };
  std::map<std::string, OracleModel> out;
  for (const auto& m : models) {
    auto& om = out[m];
    om.clean_error = oracle_error(cell(m, "clean", 0), m, "clean", 0);
    for (const auto& c : corruptions)
      for (int s = 1; s <= 5; ++s) {
        om.error[c].push_back(oracle_error(cell(m, c, s), m, c, s));
        om.macro_f1[c].push_back(oracle_macro_f1(cell(m, c, s), log.classes, m, c, s));
      }
  }
  const auto& ref = out.at(reference);
  for (const auto& m : models) {
    auto& om = out[m];
    for (const auto& c : corruptions) {
      const auto& e = om.error[c];
      const auto& r = ref.error.at(c);
      om.ce[c] = 100 * (e[0] + e[1] + e[2] + e[3] + e[4]) / (r[0] + r[1] + r[2] + r[3] + r[4]);
      const double num = (e[0] - om.clean_error) + (e[1] - om.clean_error) + (e[2] - om.clean_error) +
                         (e[3] - om.clean_error) + (e[4] - om.clean_error);
      const double den = (r[0] - ref.clean_error) + (r[1] - ref.clean_error) + (r[2] - ref.clean_error) +
                         (r[3] - ref.clean_error) + (r[4] - ref.clean_error);
      om.relative_ce[c] = 100 * num / den;
      om.mce += om.ce[c] / static_cast<double>(corruptions.size());
      om.relative_mce += om.relative_ce[c] / static_cast<double>(corruptions.size());
    }
  }
  return out;
}

}  // namespace leafc::testing
