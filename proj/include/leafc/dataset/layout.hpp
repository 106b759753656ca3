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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "leafc/errors.hpp"
#include "leafc/image/codec.hpp"

namespace leafc {

namespace fs = std::filesystem;

struct SkippedFile {
  std::string path;  ///< relative to the dataset root
  std::string reason;
};

struct DatasetClass {
  std::string name;
  std::vector<std::string> files;  ///< "<class>/<...>/<file>", forward slashes, sorted
};

/// Class-per-folder image dataset: every immediate subdirectory of the root is a class.
struct DatasetLayout {
  fs::path root;
  std::vector<DatasetClass> classes;  ///< sorted by name
  std::vector<SkippedFile> skipped;

  std::size_t file_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.files.size();
    return n;
  }

  std::vector<std::string> class_names() const {
    std::vector<std::string> out;
    for (const auto& c : classes) out.push_back(c.name);
    return out;
  }
};

namespace detail {

inline std::string lower_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

inline std::string generic_relative(const fs::path& p, const fs::path& base) {
  return fs::relative(p, base).generic_string();
}

// Empty string when the file looks like a decodable image, else the reason it was skipped.
inline std::string image_rejection(const fs::path& path) {
  const auto ext = lower_extension(path);
  if (ext != ".png" && ext != ".jpg" && ext != ".jpeg") return "not a PNG/JPEG file";
  std::ifstream in(path, std::ios::binary);
  if (!in) return "unreadable";
  std::array<std::uint8_t, 8> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  if (sniff_format(std::span<const std::uint8_t>(head.data(), got)) == ImageFormat::unknown)
    return "extension says image but content is not PNG/JPEG";
  return {};
}

}  // namespace detail

/// Lists every image below <root>/<class>/ (recursively), sorted lexicographically. Non-image and
/// unreadable files are skipped and reported in `skipped`. Two images in one class directory whose
/// paths differ only in extension are rejected, since corrupted outputs are keyed by stem.
inline DatasetLayout scan_dataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::exists(root, ec)) throw IoError("dataset root does not exist: " + root.string());
  if (!fs::is_directory(root, ec)) throw IoError("dataset root is not a directory: " + root.string());

  DatasetLayout layout;
  layout.root = root;
  std::vector<fs::path> class_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory())
      class_dirs.push_back(entry.path());
    else
      layout.skipped.push_back({detail::generic_relative(entry.path(), root), "file outside any class directory"});
  }
  std::sort(class_dirs.begin(), class_dirs.end());

  for (const auto& dir : class_dirs) {
    DatasetClass cls;
    cls.name = dir.filename().string();
    std::map<std::string, std::string> stems;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const auto rel = detail::generic_relative(entry.path(), root);
      if (auto reason = detail::image_rejection(entry.path()); !reason.empty()) {
        layout.skipped.push_back({rel, reason});
        continue;
      }
      const auto stem = fs::path(rel).replace_extension().generic_string();
      if (auto [it, fresh] = stems.emplace(stem, rel); !fresh)
        throw ValidationError("images '" + it->second + "' and '" + rel + "' share the output name '" + stem + "'");
      cls.files.push_back(rel);
    }
    std::sort(cls.files.begin(), cls.files.end());
    if (cls.files.empty()) {
      layout.skipped.push_back({cls.name + "/", "class directory without images"});
      continue;
    }
    layout.classes.push_back(std::move(cls));
  }
  std::sort(layout.skipped.begin(), layout.skipped.end(),
            [](const SkippedFile& a, const SkippedFile& b) { return a.path < b.path; });
  if (layout.classes.empty()) throw ValidationError("no classes found under " + root.string());
  return layout;
}

}  // namespace leafc
