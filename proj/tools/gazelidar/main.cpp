// Copyright 2026 The gazelidar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gazelidar/commands.hpp"

#include <gazelidar/version.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char ** argv)
{
  using namespace gazelidar::cli;

  CLI::App app{"Gaze-aware adaptive LiDAR simulator"};
  app.set_version_flag("--version", gazelidar::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;

  auto * validate = app.add_subcommand("validate", "Check a run configuration");
  validate->add_option("--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);

  RunOptions run_opts;
  std::uint64_t seed_override = 0;
  auto * run = app.add_subcommand("run", "Run the variant x fog x seed sweep");
  run->add_option("--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--jobs", run_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto * seed_opt = run->add_option("--seed-override", seed_override, "Replace the seed list with this seed");

  std::string results_dir;
  ReportFormat format = ReportFormat::table;
  const std::map<std::string, ReportFormat> formats{{"table", ReportFormat::table}, {"json", ReportFormat::json}};
  auto * report = app.add_subcommand("report", "Summarize a results directory");
  auto * dir_pos = report->add_option("results_dir", results_dir, "Directory written by `run`");
  auto * out_opt = report->add_option("--out", results_dir, "Directory written by `run` (same as positional)");
  dir_pos->excludes(out_opt);
  report->add_option("--format", format, "Output format: table (default) or json")
    ->option_text("{table|json}")
    ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    // help and version exit 0; usage errors share the generic error code
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (validate->parsed()) {
    return cmd_validate(config_path, std::cout, std::cerr);
  }
  if (run->parsed()) {
    run_opts.config = config_path;
    run_opts.out = out_dir;
    if (*seed_opt) {
      run_opts.seed_override = seed_override;
    }
    return cmd_run(run_opts, std::cout, std::cerr);
  }
  if (results_dir.empty()) {
    std::cerr << "report: a results directory is required\n";
    return kError;
  }
  return cmd_report(results_dir, format, std::cout, std::cerr);
}
