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
#include <cstdint>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "leafc/metrics/records.hpp"

namespace leafc::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2, kIncompleteGrid = 3 };

inline constexpr const char* kSeedEnv = "LEAFC_SEED";

#ifdef LEAFC_ASSET_DIR
inline const std::filesystem::path kDefaultAssetDir = LEAFC_ASSET_DIR;
#else
inline const std::filesystem::path kDefaultAssetDir = "assets";
#endif

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Fully resolved options for one invocation.
struct RunConfig {
  std::string subcommand;

  // corrupt
  std::filesystem::path input;  ///< clean dataset root (also `validate --dataset`)
  std::filesystem::path output;  ///< corrupted root, summary file or report dir
  std::vector<std::string> kinds;  ///< empty selects all
  std::vector<int> severities;     ///< empty selects 1-5
  std::uint64_t seed = 0;
  unsigned workers = default_workers();
  std::filesystem::path severity_table;  ///< empty selects the built-in table
  std::filesystem::path assets = kDefaultAssetDir;

  // evaluate / validate
  std::vector<std::filesystem::path> logs;
  std::string reference_model;
  Split split = Split::all;
  std::vector<std::string> classes;  ///< empty infers from the logs

  // report
  std::filesystem::path summary;
  bool comma_decimals = false;

  std::filesystem::path config_file;

  /// Provenance record. Worker count is omitted; it cannot change any output byte.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    auto paths = [](const std::vector<std::filesystem::path>& ps) {
      std::vector<std::string> out;
      for (const auto& p : ps) out.push_back(p.generic_string());
      return out;
    };
    if (subcommand == "corrupt") {
      j["input"] = input.generic_string();
      j["output"] = output.generic_string();
      j["kinds"] = kinds;
      j["severities"] = severities;
      j["seed"] = seed;
      j["severity_table"] = severity_table.empty() ? "built-in" : severity_table.generic_string();
      j["assets"] = assets.generic_string();
    } else if (subcommand == "evaluate") {
      j["logs"] = paths(logs);
      j["output"] = output.generic_string();
      j["reference_model"] = reference_model;
      j["split"] = std::string(name(split));
      j["classes"] = classes;
    } else if (subcommand == "report") {
      j["summary"] = summary.generic_string();
      j["output"] = output.generic_string();
      j["comma_decimals"] = comma_decimals;
    } else if (subcommand == "validate") {
      j["dataset"] = input.generic_string();
      j["logs"] = paths(logs);
      j["classes"] = classes;
    }
    if (!config_file.empty()) j["config_file"] = config_file.generic_string();
    return j;
  }
};

}  // namespace leafc::cli
