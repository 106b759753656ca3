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
#include <cmath>
#include <cstddef>
#include <map>
#include <ranges>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "leafc/errors.hpp"
#include "leafc/metrics/records.hpp"

namespace leafc {

namespace detail {

template <class T>
const PredictionRecord& as_record(const T& r) {
  if constexpr (std::is_pointer_v<T>) return *r;
  else return r;
}

}  // namespace detail

template <class R>
concept RecordRange = std::ranges::input_range<R> &&
                      (std::is_same_v<std::remove_cvref_t<std::ranges::range_value_t<R>>, PredictionRecord> ||
                       std::is_same_v<std::remove_cvref_t<std::ranges::range_value_t<R>>, const PredictionRecord*> ||
                       std::is_same_v<std::remove_cvref_t<std::ranges::range_value_t<R>>, PredictionRecord*>);

/// Fraction of records whose prediction differs from the truth. `cell` only labels the error.
template <RecordRange R>
double top1_error(const R& records, const GridCell& cell = {}) {
  std::size_t n = 0, wrong = 0;
  for (const auto& item : records) {
    ++n;
    wrong += !detail::as_record(item).correct();
  }
  if (n == 0) throw MissingCellError({cell});
  return static_cast<double>(wrong) / static_cast<double>(n);
}

/// Square confusion matrix over a fixed class list; rows are true labels.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::span<const std::string> classes) : classes_(classes.begin(), classes.end()) {
    if (classes_.empty()) throw InvalidArgument("class set is empty");
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (!index_.emplace(classes_[i], i).second) throw InvalidArgument("duplicate class '" + classes_[i] + "'");
    counts_.assign(classes_.size() * classes_.size(), 0);
  }

  void add(const std::string& truth, const std::string& predicted) {
    ++counts_[lookup(truth) * classes_.size() + lookup(predicted)];
    ++total_;
  }

  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t total() const noexcept { return total_; }
  std::size_t at(std::size_t truth, std::size_t predicted) const { return counts_.at(truth * size() + predicted); }

  /// Per-class F1 via precision and recall; 0 when P + R = 0 or the class never occurs.
  double f1(std::size_t k) const {
    std::size_t tp = at(k, k), row = 0, col = 0;
    for (std::size_t j = 0; j < size(); ++j) {
      row += at(k, j);
      col += at(j, k);
    }
    const double precision = col ? static_cast<double>(tp) / static_cast<double>(col) : 0.0;
    const double recall = row ? static_cast<double>(tp) / static_cast<double>(row) : 0.0;
    return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  }

  double macro_f1() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < size(); ++k) sum += f1(k);
    return sum / static_cast<double>(size());
  }

 private:
  std::size_t lookup(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InvalidArgument("label '" + label + "' not in class set");
    return it->second;
  }

  std::vector<std::string> classes_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

template <RecordRange R>
ConfusionMatrix confusion_matrix(const R& records, std::span<const std::string> classes) {
  ConfusionMatrix cm(classes);
  for (const auto& item : records) {
    const auto& r = detail::as_record(item);
    cm.add(r.true_label, r.predicted_label);
  }
  return cm;
}

/// Unweighted mean of per-class F1 over every class in `classes`.
template <RecordRange R>
double macro_f1(const R& records, std::span<const std::string> classes, const GridCell& cell = {}) {
  auto cm = confusion_matrix(records, classes);
  if (cm.total() == 0) throw MissingCellError({cell});
  return cm.macro_f1();
}

using SeverityErrors = std::array<double, kMaxSeverity>;

/// Error rates are ratios of counts, so a denominator that is zero in exact arithmetic can come
/// out as a few ulps after summation. Anything this small counts as zero.
inline constexpr double kDegenerateTolerance = 1e-12;

/// 100 * sum(errors_f) / sum(errors_ref).
inline double corruption_error(const SeverityErrors& errors_f, const SeverityErrors& errors_ref,
                               const std::string& corruption = {}) {
  double num = 0.0, den = 0.0;
  for (std::size_t s = 0; s < errors_f.size(); ++s) {
    num += errors_f[s];
    den += errors_ref[s];
  }
  if (std::abs(den) <= kDegenerateTolerance) throw DegenerateReference(corruption, "reference error sums to zero");
  return 100.0 * num / den;
}

struct RelativeError {
  double value = 0.0;
  bool flagged = false;  ///< reference degradation is negative
};

/// 100 * sum(errors_f - clean_f) / sum(errors_ref - clean_ref).
inline RelativeError relative_corruption_error(const SeverityErrors& errors_f, double clean_f,
                                               const SeverityErrors& errors_ref, double clean_ref,
                                               const std::string& corruption = {}) {
  double num = 0.0, den = 0.0;
  for (std::size_t s = 0; s < errors_f.size(); ++s) {
    num += errors_f[s] - clean_f;
    den += errors_ref[s] - clean_ref;
  }
  if (std::abs(den) <= kDegenerateTolerance)
    throw DegenerateReference(corruption, "reference degradation sums to zero");
  return {100.0 * num / den, den < 0.0};
}

}  // namespace leafc
