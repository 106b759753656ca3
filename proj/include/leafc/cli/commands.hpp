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

#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafc/cli/config.hpp"
#include "leafc/corrupt/default_table.hpp"
#include "leafc/corrupt/kind.hpp"
#include "leafc/corrupt/weather.hpp"
#include "leafc/dataset/builder.hpp"
#include "leafc/dataset/layout.hpp"
#include "leafc/dataset/verify.hpp"
#include "leafc/errors.hpp"
#include "leafc/metrics/records.hpp"
#include "leafc/metrics/summary.hpp"
#include "leafc/report/bundle.hpp"

namespace leafc::cli {

/// Runs `body`, translating exceptions into the documented exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const MissingCellError& e) {
    err << "error: " << e.what() << '\n';
    return kIncompleteGrid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const AssetNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

inline std::vector<CorruptionKind> resolve_kinds(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return {kAllCorruptions.begin(), kAllCorruptions.end()};
  std::vector<CorruptionKind> kinds;
  for (const auto& t : tokens) kinds.push_back(kind_from_name(t));
  return kinds;
}

inline int cmd_corrupt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.output.empty()) throw InvalidArgument("--out is required");
    BuildOptions opt;
    opt.kinds = resolve_kinds(cfg.kinds);
    if (!cfg.severities.empty()) opt.severities = cfg.severities;
    for (int s : opt.severities) check_severity(s);
    opt.global_seed = cfg.seed;
    opt.workers = std::max(1u, cfg.workers);
    opt.run_config = cfg.to_json();

    std::optional<SeverityTable> custom;
    if (!cfg.severity_table.empty()) custom = SeverityTable::load(cfg.severity_table);
    opt.table = custom ? &*custom : &default_severity_table();
    FrostBank frost;
    if (std::find(opt.kinds.begin(), opt.kinds.end(), CorruptionKind::frost) != opt.kinds.end()) {
      frost = FrostBank::load(cfg.assets / "frost");
      opt.frost = &frost;
    }

    const auto layout = scan_dataset(cfg.input);
    for (const auto& s : layout.skipped) err << "skipped " << s.path << ": " << s.reason << '\n';
    const auto manifest = build_corrupted_dataset(layout, cfg.output, opt);
    out << "classes: " << layout.classes.size() << ", clean images: " << layout.file_count() << '\n';
    out << "subsets: " << manifest.subset_count() << ", files written: " << manifest.output_count() << '\n';
    for (const auto& f : manifest.failures) err << "failed " << f.path << ": " << f.reason << '\n';
    if (!manifest.complete) {
      err << "error: build aborted: " << manifest.abort_reason << '\n';
      return static_cast<int>(kIo);
    }
    return static_cast<int>(manifest.failures.empty() ? kOk : kValidation);
  });
}

inline std::optional<std::vector<std::string>> declared_classes(const RunConfig& cfg) {
  if (cfg.classes.empty()) return std::nullopt;
  return cfg.classes;
}

inline void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  detail::write_text(path, j.dump(2) + "\n");
}

inline int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.logs.empty()) throw InvalidArgument("at least one --logs file is required");
    if (cfg.reference_model.empty()) throw InvalidArgument("--reference is required");
    if (cfg.output.empty()) throw InvalidArgument("--out is required");
    const auto log = load_logs(cfg.logs, declared_classes(cfg));
    const auto surface = build_surface(log, cfg.split);
    auto summary = summarize(surface, cfg.reference_model);
    summary.run_config = cfg.to_json();
    write_json(cfg.output, to_json(summary));
    for (const auto& w : summary.warnings) err << "warning: " << w << '\n';
    for (const auto& m : summary.models)
      out << m.name << ": clean error " << format_fixed(100.0 * m.clean_error, kMeanDecimals) << ", mCE "
          << format_fixed(m.mce, kMeanDecimals) << ", relative mCE " << format_fixed(m.relative_mce, kMeanDecimals)
          << '\n';
    return static_cast<int>(kOk);
  });
}

inline RobustnessSummary read_summary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open summary " + path.string());
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": malformed JSON: " + e.what());
  }
  return summary_from_json(j);
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.output.empty()) throw InvalidArgument("--out is required");
    const auto summary = read_summary(cfg.summary);
    auto bundle = build_report(summary);
    bundle.run_config = {{"report", cfg.to_json()}, {"evaluate", summary.run_config}};
    const auto files = write_report(bundle, cfg.output, cfg.comma_decimals ? NumberFormat::comma() : NumberFormat{});
    out << "wrote " << files.size() << " files to " << cfg.output.string() << '\n';
    return static_cast<int>(kOk);
  });
}

/// Reports every problem rather than stopping at the first; exit 0 only when nothing was found.
inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.input.empty() && cfg.logs.empty()) throw InvalidArgument("nothing to validate: pass --dataset and/or --log");
    int code = kOk;
    auto fail = [&](int c) { code = std::max(code, c); };
    if (!cfg.input.empty()) {
      std::error_code ec;
      if (std::filesystem::exists(cfg.input / "manifest.json", ec)) {
        const auto findings = verify_corrupted_tree(cfg.input);
        for (const auto& f : findings) out << cfg.input.string() << ": " << f << '\n';
        if (!findings.empty()) fail(kValidation);
        else out << cfg.input.string() << ": corrupted tree matches its manifest\n";
      } else {
        try {
          const auto layout = scan_dataset(cfg.input);
          for (const auto& s : layout.skipped) out << cfg.input.string() << ": skipped " << s.path << ": " << s.reason << '\n';
          out << cfg.input.string() << ": " << layout.classes.size() << " classes, " << layout.file_count()
              << " images\n";
        } catch (const IoError& e) {
          out << e.what() << '\n';
          fail(kIo);
        } catch (const std::exception& e) {
          out << cfg.input.string() << ": " << e.what() << '\n';
          fail(kValidation);
        }
      }
    }
    if (!cfg.logs.empty()) {
      LogReader reader(declared_classes(cfg));
      for (const auto& p : cfg.logs) {
        try {
          reader.read_file(p);
        } catch (const IoError& e) {
          out << e.what() << '\n';
          fail(kIo);
        }
      }
      for (const auto& issue : reader.issues()) out << issue.describe() << '\n';
      if (!reader.ok()) fail(kValidation);
      else out << reader.record_count() << " log records valid\n";
    }
    return code;
  });
}

}  // namespace leafc::cli
