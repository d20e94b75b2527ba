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

#include "gazelidar/policy.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gazelidar
{

struct Quartiles
{
  double q1;
  double median;
  double q3;
};

/// Quantile with linear interpolation between order statistics (the inclusive
/// method: position p * (n - 1) on the sorted sample). Throws on empty input.
double quantile_linear(std::vector<double> values, double p);
Quartiles quartiles(const std::vector<double> & values);

struct ResultRow
{
  Variant variant;
  double fog;
  std::uint64_t seed;
  bool detected;
  std::optional<double> tta;
  std::size_t frames;
  std::optional<double> mean_density;
};

struct DensityRow
{
  Variant variant;
  double fog;
  std::uint64_t seed;
  std::size_t frame;
  std::size_t points_in_roi;
  double roi_width_deg;
  double density;
};

struct FailureRow
{
  Variant variant;
  double fog;
  std::uint64_t seed;
  std::string reason;
};

/// Readers for the files written by the runner. Throw ParseError with the
/// 1-based row number (the header is row 1).
std::vector<ResultRow> read_results_csv(std::istream & in, const std::string & source);
std::vector<DensityRow> read_density_csv(std::istream & in, const std::string & source);
std::vector<FailureRow> read_failures_csv(std::istream & in, const std::string & source);

struct CellSummary
{
  Variant variant;
  double fog;
  std::size_t runs{0};
  std::size_t failures{0};
  std::size_t detections{0};
  std::optional<Quartiles> tta;      // over detected runs
  std::optional<Quartiles> density;  // over per-frame samples
};

struct ReportSummary
{
  std::string version;
  std::vector<CellSummary> cells;  // sorted by variant, then fog

  const CellSummary * find(Variant v, double fog) const;
};

ReportSummary summarize(
  const std::vector<ResultRow> & results, const std::vector<DensityRow> & density,
  const std::vector<FailureRow> & failures);

/// Reads results.csv, density_samples.csv and (optionally) failures.csv.
ReportSummary summarize_results_dir(const std::filesystem::path & dir);

std::string summary_to_json(const ReportSummary & summary);
std::string render_table(const ReportSummary & summary);

}  // namespace gazelidar
