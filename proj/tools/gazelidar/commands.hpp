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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace gazelidar::cli
{

/// Process exit codes shared by all commands.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // invalid config (validate) or at least one failed run (run)
  kError = 2,   // unreadable input, unwritable output, malformed results
};

int cmd_validate(const std::filesystem::path & config_path, std::ostream & out, std::ostream & err);

struct RunOptions
{
  std::filesystem::path config;
  std::filesystem::path out;
  unsigned jobs{1};
  std::optional<std::uint64_t> seed_override;
};

/// Runs the sweep and writes results.csv, density_samples.csv, failures.csv and
/// summary.json into `options.out`.
int cmd_run(const RunOptions & options, std::ostream & out, std::ostream & err);

enum class ReportFormat { table, json };

int cmd_report(
  const std::filesystem::path & results_dir, ReportFormat format, std::ostream & out, std::ostream & err);

}  // namespace gazelidar::cli
