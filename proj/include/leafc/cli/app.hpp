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
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leafc/cli/commands.hpp"
#include "leafc/cli/config.hpp"
#include "leafc/version.hpp"

namespace leafc::cli {

/// Parses arguments (without the program name) and runs the selected subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corruption-robustness benchmark toolkit for leaf-image classifiers", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  auto* config = app.set_config("--config", "", "INI/TOML file supplying option defaults (command-line flags win)");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string split = "all";

  auto* corrupt = app.add_subcommand("corrupt", "Build corrupted copies of a class-per-folder dataset");
  corrupt->add_option("--in", cfg.input, "Clean dataset root")->required();
  corrupt->add_option("--out", cfg.output, "Output root")->required();
  corrupt->add_option("--seed", cfg.seed, "Global seed")->envname(kSeedEnv);
  corrupt->add_option("--kinds", cfg.kinds, "Comma-separated corruption kinds (default: all 19)")->delimiter(',');
  corrupt->add_option("--severities", cfg.severities, "Comma-separated severities (default: 1-5)")
      ->delimiter(',')
      ->check(CLI::Range(kMinSeverity, kMaxSeverity));
  corrupt->add_option("--workers", cfg.workers, "Worker threads (default: available CPUs)")
      ->check(CLI::PositiveNumber);
  corrupt->add_option("--table", cfg.severity_table, "Severity table file (default: built-in)");
  corrupt->add_option("--assets", cfg.assets, "Asset directory holding frost/ textures");

  auto* evaluate = app.add_subcommand("evaluate", "Compute CE, relative CE and mCE from prediction logs");
  evaluate->add_option("--logs", cfg.logs, "Prediction log CSV files")->required();
  evaluate->add_option("--reference", cfg.reference_model, "Normalization reference model")->required();
  evaluate->add_option("--split", split, "Split filter")->check(CLI::IsMember({"train", "val", "test", "all"}));
  evaluate->add_option("--classes", cfg.classes, "Comma-separated class set (default: labels seen in logs)")
      ->delimiter(',');
  evaluate->add_option("--out", cfg.output, "Summary JSON path")->required();

  auto* report = app.add_subcommand("report", "Render tables, rankings and charts from a summary");
  report->add_option("--summary", cfg.summary, "Summary JSON from evaluate")->required();
  report->add_option("--out", cfg.output, "Report directory")->required();
  report->add_flag("--comma-decimals", cfg.comma_decimals, "Use decimal commas (fields become ';'-separated)");

  auto* validate = app.add_subcommand("validate", "Check a dataset tree and/or prediction logs");
  validate->add_option("--dataset", cfg.input, "Clean dataset root or corrupted tree");
  validate->add_option("--log", cfg.logs, "Prediction log CSV files");
  validate->add_option("--classes", cfg.classes, "Comma-separated class set")->delimiter(',');

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  cfg.split = *parse_split(split);
  if (config->count()) cfg.config_file = config->as<std::string>();
  if (corrupt->parsed()) cfg.subcommand = "corrupt";
  else if (evaluate->parsed()) cfg.subcommand = "evaluate";
  else if (report->parsed()) cfg.subcommand = "report";
  else cfg.subcommand = "validate";
  out << "run config: " << cfg.to_json().dump() << '\n';

  if (cfg.subcommand == "corrupt") return cmd_corrupt(cfg, out, err);
  if (cfg.subcommand == "evaluate") return cmd_evaluate(cfg, out, err);
  if (cfg.subcommand == "report") return cmd_report(cfg, out, err);
  return cmd_validate(cfg, out, err);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace leafc::cli
