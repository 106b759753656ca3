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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leafc {

/// Precondition violated by a caller-supplied value (bad kernel size, severity out of range, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bundled asset (frost textures) could not be located or decoded.
class AssetNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem or codec failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: prediction logs, summaries, severity tables, dataset layouts.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One (model, corruption, severity) cell of the evaluation grid. Clean cells use ("clean", 0).
struct GridCell {
  std::string model;
  std::string corruption;
  int severity = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

inline std::string to_string(const GridCell& cell) {
  return "(" + cell.model + ", " + cell.corruption + ", " + std::to_string(cell.severity) + ")";
}

/// The evaluation grid has holes; `cells()` lists every absent triple.
class MissingCellError : public std::runtime_error {
 public:
  explicit MissingCellError(std::vector<GridCell> cells)
      : std::runtime_error(describe(cells)), cells_(std::move(cells)) {}

  const std::vector<GridCell>& cells() const noexcept { return cells_; }

 private:
  static std::string describe(const std::vector<GridCell>& cells) {
    std::string msg = "missing " + std::to_string(cells.size()) + " evaluation cell(s):";
    for (const auto& c : cells) msg += " " + to_string(c);
    return msg;
  }

  std::vector<GridCell> cells_;
};

/// The reference model's error sum (or degradation sum) is zero, so normalization is undefined.
class DegenerateReference : public std::runtime_error {
 public:
  DegenerateReference(const std::string& corruption, const std::string& what)
      : std::runtime_error("degenerate reference for corruption '" + corruption + "': " + what),
        corruption_(corruption) {}

  const std::string& corruption() const noexcept { return corruption_; }

 private:
  std::string corruption_;
};

}  // namespace leafc
