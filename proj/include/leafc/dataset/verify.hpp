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

#include "leafc/corrupt/kind.hpp"
#include "leafc/dataset/layout.hpp"
#include "leafc/errors.hpp"

namespace leafc {

/// Checks a built corruption tree against its manifest.json: every listed subset exists, holds
/// the recorded number of images and the same class set. Returns one message per problem.
inline std::vector<std::string> verify_corrupted_tree(const fs::path& root) {
  std::vector<std::string> findings;
  const auto manifest_path = root / "manifest.json";
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + manifest_path.string());
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    return {manifest_path.string() + ": malformed JSON: " + e.what()};
  }
  try {
    if (m.at("status").get<std::string>() != "complete") findings.push_back("manifest status is not complete");
    const auto classes = m.at("classes").get<std::vector<std::string>>();
    for (const auto& f : m.at("failures"))
      findings.push_back("recorded failure: " + f.at("path").get<std::string>() + ": " + f.at("reason").get<std::string>());
    for (const auto& s : m.at("subsets")) {
      const auto kind = s.at("kind").get<std::string>();
      const int severity = s.at("severity").get<int>();
      const auto expected = s.at("file_count").get<std::size_t>();
      const std::string label = kind + "/" + std::to_string(severity);
      if (!parse_kind(kind) || severity < kMinSeverity || severity > kMaxSeverity) {
        findings.push_back("manifest lists invalid subset " + label);
        continue;
      }
      DatasetLayout layout;
      try {
        layout = scan_dataset(root / kind / std::to_string(severity));
      } catch (const std::exception& e) {
        findings.push_back(label + ": " + e.what());
        continue;
      }
      if (layout.file_count() != expected)
        findings.push_back(label + ": expected " + std::to_string(expected) + " images, found " +
                           std::to_string(layout.file_count()));
      if (layout.class_names() != classes) findings.push_back(label + ": class directories differ from manifest");
      for (const auto& sk : layout.skipped) findings.push_back(label + "/" + sk.path + ": " + sk.reason);
    }
  } catch (const nlohmann::json::exception& e) {
    findings.push_back(manifest_path.string() + ": unexpected structure: " + e.what());
  }
  return findings;
}

}  // namespace leafc
