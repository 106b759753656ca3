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
#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "leafc/corrupt/apply.hpp"
#include "leafc/corrupt/kind.hpp"
#include "leafc/corrupt/severity_table.hpp"
#include "leafc/dataset/layout.hpp"
#include "leafc/dataset/seed.hpp"
#include "leafc/errors.hpp"
#include "leafc/image/codec.hpp"
#include "leafc/image/quantize.hpp"
#include "leafc/version.hpp"

namespace leafc {

struct BuildOptions {
  std::vector<CorruptionKind> kinds{kAllCorruptions.begin(), kAllCorruptions.end()};
  std::vector<int> severities{1, 2, 3, 4, 5};
  std::uint64_t global_seed = 0;
  unsigned workers = 1;
  const SeverityTable* table = nullptr;  ///< required
  const FrostBank* frost = nullptr;      ///< required when frost is among the kinds
  nlohmann::ordered_json run_config;     ///< copied verbatim into the manifest
};

struct SubsetCount {
  CorruptionKind kind;
  int severity;
  std::size_t file_count;
};

struct BuildFailure {
  std::string path;  ///< clean image (or output) that failed
  std::string reason;
};

/// Provenance record written to <out_root>/manifest.json.
struct DatasetManifest {
  std::uint64_t global_seed = 0;
  std::string severity_table_version;
  std::string severity_table_hash;
  std::vector<CorruptionKind> kinds;
  std::vector<int> severities;
  std::vector<std::string> classes;
  std::size_t clean_file_count = 0;
  std::vector<SkippedFile> skipped;
  std::vector<SubsetCount> subsets;
  std::vector<BuildFailure> failures;
  bool complete = false;
  std::string abort_reason;
  std::string started_at;
  std::string finished_at;
  unsigned workers = 1;
  nlohmann::ordered_json run_config;

  std::size_t subset_count() const noexcept { return subsets.size(); }

  std::size_t output_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : subsets) n += s.file_count;
    return n;
  }

  /// Everything except the `execution` block (timestamps, worker count) is a pure function of
  /// the inputs.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["status"] = complete ? "complete" : "partial";
    if (!complete) j["abort_reason"] = abort_reason;
    j["global_seed"] = global_seed;
    j["seed_rule"] = kSeedRule;
    j["rng_algorithm"] = Rng::kAlgorithm;
    j["severity_table"] = {{"version", severity_table_version}, {"hash", severity_table_hash}};
    j["corruption_resolution"] = "native";
    j["output_encoding"] = {{"default", "png"}, {"jpeg", "jpeg at the corruption quality"}};
    auto& jk = j["kinds"] = nlohmann::ordered_json::array();
    for (auto k : kinds) jk.push_back(std::string(name(k)));
    j["severities"] = severities;
    j["classes"] = classes;
    j["clean_file_count"] = clean_file_count;
    auto& js = j["skipped_files"] = nlohmann::ordered_json::array();
    for (const auto& s : skipped) js.push_back({{"path", s.path}, {"reason", s.reason}});
    j["subset_count"] = subsets.size();
    auto& jsub = j["subsets"] = nlohmann::ordered_json::array();
    for (const auto& s : subsets)
      jsub.push_back({{"kind", std::string(name(s.kind))}, {"severity", s.severity}, {"file_count", s.file_count}});
    auto& jf = j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) jf.push_back({{"path", f.path}, {"reason", f.reason}});
    j["run_config"] = run_config.is_null() ? nlohmann::ordered_json::object() : run_config;
    j["execution"] = {{"started_at", started_at}, {"finished_at", finished_at}, {"workers", workers}};
    return j;
  }
};

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Output path of one corrupted image: <kind>/<severity>/<class>/.../<stem>.png, or .jpg for
/// the jpeg corruption (stored as the very stream the corruption decoded).
inline std::string corrupted_relative_path(const std::string& clean_relative, CorruptionKind kind, int severity) {
  fs::path p(clean_relative);
  p.replace_extension(kind == CorruptionKind::jpeg ? ".jpg" : ".png");
  return std::string(name(kind)) + "/" + std::to_string(severity) + "/" + p.generic_string();
}

namespace detail {

struct ImageReport {
  std::vector<std::pair<std::size_t, std::size_t>> written;  // (kind index in options, severity index)
  std::vector<BuildFailure> failures;
};

inline void encode_and_write(const fs::path& path, const ImageBuffer& img, CorruptionKind kind,
                             const CorruptionParams& params) {
  if (kind == CorruptionKind::jpeg) {
    const auto& p = std::get<JpegParams>(params);
    write_file(path, jpeg_stream(img, p));
  } else {
    write_file(path, encode_png(quantize(img)));
  }
}

}  // namespace detail

/// Mirrors `layout` into `out_root/<kind>/<severity>/<class>/...` for every requested kind and
/// severity, then writes `out_root/manifest.json`.
///
/// Work is split per clean image across `workers` threads; every image/corruption pair draws
/// from its own derived seed, so the tree is byte-identical for any worker count. A per-image
/// decode failure is recorded and skipped. A write failure stops the build and the manifest is
/// marked partial.
inline DatasetManifest build_corrupted_dataset(const DatasetLayout& layout, const fs::path& out_root,
                                               const BuildOptions& options) {
  if (options.table == nullptr) throw InvalidArgument("build_corrupted_dataset: severity table required");
  if (options.kinds.empty()) throw InvalidArgument("build_corrupted_dataset: no corruption kinds selected");
  if (options.severities.empty()) throw InvalidArgument("build_corrupted_dataset: no severities selected");

  DatasetManifest manifest;
  manifest.started_at = utc_timestamp();
  manifest.global_seed = options.global_seed;
  manifest.severity_table_version = options.table->version();
  manifest.severity_table_hash = options.table->hash();
  manifest.run_config = options.run_config;
  manifest.workers = std::max(1u, options.workers);
  manifest.classes = layout.class_names();
  manifest.clean_file_count = layout.file_count();
  manifest.skipped = layout.skipped;

  std::set<CorruptionKind> kind_set(options.kinds.begin(), options.kinds.end());
  manifest.kinds.assign(kind_set.begin(), kind_set.end());
  std::set<int> sev_set;
  for (int s : options.severities) {
    check_severity(s);
    sev_set.insert(s);
  }
  manifest.severities.assign(sev_set.begin(), sev_set.end());
  if (kind_set.count(CorruptionKind::frost) && (options.frost == nullptr || options.frost->empty()))
    throw AssetNotFound("frost corruption selected but no frost textures were loaded");

  // Resolve parameters once, up front.
  std::vector<std::vector<CorruptionSpec>> specs;
  for (auto k : manifest.kinds) {
    auto& row = specs.emplace_back();
    for (int s : manifest.severities) row.push_back(options.table->resolve(k, s));
  }

  std::vector<std::string> files;
  for (const auto& cls : layout.classes) files.insert(files.end(), cls.files.begin(), cls.files.end());

  // Directories are created up front so workers never race on them.
  try {
    fs::create_directories(out_root);
    std::set<fs::path> dirs;
    for (const auto& f : files)
      for (auto k : manifest.kinds)
        for (int s : manifest.severities) dirs.insert((out_root / corrupted_relative_path(f, k, s)).parent_path());
    for (const auto& d : dirs) fs::create_directories(d);
  } catch (const fs::filesystem_error& e) {
    throw IoError(std::string("cannot create output directories: ") + e.what());
  }

  std::vector<detail::ImageReport> reports(files.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex abort_mutex;
  std::string abort_reason;

  auto worker = [&] {
    for (;;) {
      if (abort.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      auto& report = reports[i];
      ImageBuffer clean;
      try {
        clean = dequantize(load_image(layout.root / files[i]));
      } catch (const std::exception& e) {
        report.failures.push_back({files[i], e.what()});
        continue;
      }
      for (std::size_t ki = 0; ki < manifest.kinds.size(); ++ki) {
        for (std::size_t si = 0; si < manifest.severities.size(); ++si) {
          const auto& spec = specs[ki][si];
          const auto out_rel = corrupted_relative_path(files[i], spec.kind, spec.severity);
          try {
            const Rng rng(derive_seed(options.global_seed, files[i], name(spec.kind), spec.severity));
            const auto corrupted = apply_corruption(clean, spec, rng, options.frost);
            detail::encode_and_write(out_root / out_rel, corrupted, spec.kind, spec.params);
            report.written.emplace_back(ki, si);
          } catch (const IoError& e) {
            std::lock_guard lock(abort_mutex);
            if (!abort.exchange(true)) abort_reason = out_rel + ": " + e.what();
            report.failures.push_back({out_rel, e.what()});
            return;
          } catch (const std::exception& e) {
            report.failures.push_back({out_rel, e.what()});
          }
        }
      }
    }
  };

  const unsigned n_workers = std::min<unsigned>(manifest.workers, std::max<std::size_t>(1, files.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::vector<std::size_t>> counts(manifest.kinds.size(), std::vector<std::size_t>(manifest.severities.size(), 0));
  for (const auto& r : reports) {
    for (auto [ki, si] : r.written) ++counts[ki][si];
    manifest.failures.insert(manifest.failures.end(), r.failures.begin(), r.failures.end());
  }
  for (std::size_t ki = 0; ki < manifest.kinds.size(); ++ki)
    for (std::size_t si = 0; si < manifest.severities.size(); ++si)
      manifest.subsets.push_back({manifest.kinds[ki], manifest.severities[si], counts[ki][si]});

  manifest.complete = !abort.load();
  manifest.abort_reason = abort_reason;
  manifest.finished_at = utc_timestamp();

  const auto text = manifest.to_json().dump(2) + "\n";
  try {
    write_file(out_root / "manifest.json",
               std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  } catch (const IoError&) {
    if (manifest.complete) throw;
  }
  return manifest;
}

}  // namespace leafc
