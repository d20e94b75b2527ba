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

#include <gazelidar/config.hpp>
#include <gazelidar/error.hpp>
#include <gazelidar/report.hpp>
#include <gazelidar/runner.hpp>

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <sstream>

namespace gazelidar::cli
{

namespace
{

void write_file(const std::filesystem::path & path, const std::string & content)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  f << content;
  f.flush();
  if (!f) {
    throw Error("failed writing '" + path.string() + "'");
  }
}

}  // namespace

int cmd_validate(const std::filesystem::path & config_path, std::ostream & out, std::ostream & err)
{
  const std::string source = config_path.string();
  auto loaded = read_run_config(config_path);
  auto diags = loaded.diagnostics;
  if (loaded.config) {
    diags = check_run_config(*loaded.config);
  }
  if (!diags.empty()) {
    for (const auto & d : diags) {
      err << format_diagnostic(source, d) << "\n";
    }
    err << fmt::format("{}: {} problem(s) found\n", source, diags.size());
    return kFailed;
  }
  const RunConfig & c = *loaded.config;
  out << fmt::format(
    "{}: valid ({} variant(s) x {} fog level(s) x {} seed(s) = {} runs)\n", source, c.variants.size(),
    c.fog_fractions.size(), c.seeds.size(), c.variants.size() * c.fog_fractions.size() * c.seeds.size());
  return kOk;
}

int cmd_run(const RunOptions & options, std::ostream & out, std::ostream & err)
{
  RunConfig config;
  try {
    config = load_run_config(options.config);
  } catch (const Error & e) {
    err << e.what() << "\n";
    return kError;
  }
  if (options.seed_override) {
    config.seeds = {*options.seed_override};
  }

  std::vector<RunRecord> records;
  try {
    records = run_sweep(config, options.jobs);
  } catch (const Error & e) {
    err << e.what() << "\n";
    return kError;
  }

  std::size_t failed = 0;
  for (const auto & r : records) {
    if (r.failure) {
      ++failed;
      err << fmt::format(
        "run failed: variant={} fog={} seed={}: {}\n", to_string(r.variant.variant), r.fog_fraction,
        r.seed, *r.failure);
    }
  }

  try {
    std::filesystem::create_directories(options.out);
    std::ostringstream results;
    std::ostringstream density;
    std::ostringstream failures;
    write_results_csv(results, records);
    write_density_csv(density, records);
    write_failures_csv(failures, records);
    write_file(options.out / "results.csv", results.str());
    write_file(options.out / "density_samples.csv", density.str());
    write_file(options.out / "failures.csv", failures.str());
    // summarized from the written files so `report` reproduces it exactly
    const ReportSummary summary = summarize_results_dir(options.out);
    write_file(options.out / "summary.json", summary_to_json(summary));
  } catch (const std::filesystem::filesystem_error & e) {
    err << e.what() << "\n";
    return kError;
  } catch (const Error & e) {
    err << e.what() << "\n";
    return kError;
  }

  out << fmt::format(
    "{} run(s), {} failed; results in {}\n", records.size(), failed, options.out.string());
  return failed == 0 ? kOk : kFailed;
}

int cmd_report(
  const std::filesystem::path & results_dir, ReportFormat format, std::ostream & out, std::ostream & err)
{
  ReportSummary summary;
  try {
    summary = summarize_results_dir(results_dir);
  } catch (const Error & e) {
    err << e.what() << "\n";
    return kError;
  }
  out << (format == ReportFormat::json ? summary_to_json(summary) : render_table(summary));
  return kOk;
}

}  // namespace gazelidar::cli
