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
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "leafc/corrupt/kind.hpp"
#include "leafc/errors.hpp"

namespace leafc {

namespace fs = std::filesystem;

inline constexpr std::string_view kCleanToken = "clean";
inline constexpr std::string_view kLogHeader = "model,split,corruption,severity,image_id,true_label,predicted_label";

enum class Split { train, val, test, all };

constexpr std::string_view name(Split s) noexcept {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
    case Split::all: return "all";
  }
  return "";
}

inline std::optional<Split> parse_split(std::string_view token) noexcept {
  for (auto s : {Split::train, Split::val, Split::test, Split::all})
    if (name(s) == token) return s;
  return std::nullopt;
}

/// One classifier verdict. `corruption` is "clean" (severity 0) or a canonical kind name.
struct PredictionRecord {
  std::string model;
  Split split = Split::all;
  std::string corruption;
  int severity = 0;
  std::string image_id;
  std::string true_label;
  std::string predicted_label;

  bool correct() const noexcept { return true_label == predicted_label; }
};

struct PredictionLog {
  std::vector<PredictionRecord> records;
  std::vector<std::string> classes;  ///< declared, or the sorted union of observed labels
};

/// Model names double as file-name tokens in reports.
inline bool is_model_token(std::string_view s) noexcept {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

/// Splits one CSV line; supports double-quoted fields with "" escapes (no embedded newlines).
inline std::optional<std::vector<std::string>> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      if (was_quoted) return std::nullopt;  // text after a closing quote
      cur += c;
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(cur));
  return fields;
}

/// One problem found while reading a log.
struct LogIssue {
  std::string source;
  std::size_t line = 0;  ///< 1-based; 0 for file-level issues
  std::string message;

  std::string describe() const {
    return line ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message;
  }
};

/// Streaming validator/loader. Collects every issue instead of stopping at the first, so the
/// same code backs both `load_logs` (throws on any issue) and the `validate` subcommand.
class LogReader {
 public:
  explicit LogReader(std::optional<std::vector<std::string>> declared_classes = std::nullopt) {
    if (declared_classes) {
      declared_ = std::set<std::string>(declared_classes->begin(), declared_classes->end());
      if (declared_->empty()) throw InvalidArgument("declared class set is empty");
    }
  }

  void read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open prediction log " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    read_text(buf.str(), path.string());
  }

  void read_text(std::string_view text, const std::string& source) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    std::size_t rows = 0;
    if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;  // UTF-8 BOM
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) {
        if (pos > text.size()) break;
        continue;
      }
      if (!header_seen) {
        header_seen = true;
        if (line != kLogHeader) {
          issue(source, lineno, "header must be '" + std::string(kLogHeader) + "'");
          return;
        }
        continue;
      }
      ++rows;
      parse_row(line, source, lineno);
    }
    if (!header_seen) issue(source, 0, "no records (empty file)");
    else if (rows == 0) issue(source, 0, "no records");
  }

  const std::vector<LogIssue>& issues() const noexcept { return issues_; }
  bool ok() const noexcept { return issues_.empty(); }
  std::size_t record_count() const noexcept { return records_.size(); }

  PredictionLog take() {
    PredictionLog log;
    log.records = std::move(records_);
    if (declared_) {
      log.classes.assign(declared_->begin(), declared_->end());
    } else {
      log.classes.assign(observed_.begin(), observed_.end());
    }
    return log;
  }

 private:
  void issue(const std::string& source, std::size_t line, std::string message) {
    issues_.push_back({source, line, std::move(message)});
  }

  void parse_row(std::string_view line, const std::string& source, std::size_t lineno) {
    auto fields = split_csv_line(line);
    if (!fields) return issue(source, lineno, "malformed CSV quoting");
    if (fields->size() != 7)
      return issue(source, lineno, "expected 7 fields, found " + std::to_string(fields->size()));
    PredictionRecord r;
    r.model = (*fields)[0];
    const auto& split = (*fields)[1];
    r.corruption = (*fields)[2];
    const auto& severity = (*fields)[3];
    r.image_id = (*fields)[4];
    r.true_label = (*fields)[5];
    r.predicted_label = (*fields)[6];

    if (!is_model_token(r.model)) return issue(source, lineno, "invalid model name '" + r.model + "'");
    if (auto s = parse_split(split)) r.split = *s;
    else return issue(source, lineno, "unknown split '" + split + "'");
    const bool clean = r.corruption == kCleanToken;
    if (!clean && !parse_kind(r.corruption)) return issue(source, lineno, "unknown corruption '" + r.corruption + "'");
    auto [ptr, ec] = std::from_chars(severity.data(), severity.data() + severity.size(), r.severity);
    if (ec != std::errc() || ptr != severity.data() + severity.size() || r.severity < 0 || r.severity > kMaxSeverity)
      return issue(source, lineno, "malformed severity '" + severity + "'");
    if (clean != (r.severity == 0))
      return issue(source, lineno, "severity 0 must pair with corruption 'clean' (got " + r.corruption + "/" +
                                       severity + ")");
    if (r.image_id.empty()) return issue(source, lineno, "empty image_id");
    for (const auto* label : {&r.true_label, &r.predicted_label}) {
      if (label->empty()) return issue(source, lineno, "empty label");
      if (declared_ && !declared_->count(*label)) return issue(source, lineno, "unknown label '" + *label + "'");
    }
    auto key = std::make_tuple(r.model, r.corruption, r.severity, r.image_id);
    if (auto [it, fresh] = seen_.emplace(key, source + ":" + std::to_string(lineno)); !fresh)
      return issue(source, lineno,
                   "duplicate (model, corruption, severity, image_id) key, first seen at " + it->second);
    observed_.insert(r.true_label);
    observed_.insert(r.predicted_label);
    records_.push_back(std::move(r));
  }

  std::optional<std::set<std::string>> declared_;
  std::set<std::string> observed_;
  std::map<std::tuple<std::string, std::string, int, std::string>, std::string> seen_;
  std::vector<PredictionRecord> records_;
  std::vector<LogIssue> issues_;
};

/// Reads and merges prediction logs. Any schema violation, unknown label or duplicate
/// (model, corruption, severity, image_id) key raises ValidationError naming file and line.
inline PredictionLog load_logs(std::span<const fs::path> paths,
                               std::optional<std::vector<std::string>> class_set = std::nullopt) {
  LogReader reader(std::move(class_set));
  for (const auto& p : paths) reader.read_file(p);
  if (!reader.ok()) {
    std::string msg = reader.issues().front().describe();
    if (reader.issues().size() > 1) msg += " (and " + std::to_string(reader.issues().size() - 1) + " more)";
    throw ValidationError(msg);
  }
  return reader.take();
}

}  // namespace leafc
