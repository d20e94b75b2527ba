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

#include "gazelidar/report.hpp"

#include "gazelidar/csv.hpp"
#include "gazelidar/error.hpp"
#include "gazelidar/version.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <tuple>

namespace gazelidar
{

double quantile_linear(std::vector<double> values, double p)
{
  if (values.empty()) {
    throw DomainError("quantile of an empty sample");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("quantile probability must lie in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const double pos = p * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

Quartiles quartiles(const std::vector<double> & values)
{
  return {quantile_linear(values, 0.25), quantile_linear(values, 0.5), quantile_linear(values, 0.75)};
}

namespace
{

/// Iterates data rows of a CSV with a fixed header, handing each split row and
/// its 1-based row number to `fn`.
template <typename Fn>
void for_each_row(std::istream & in, const std::string & source, const std::string & header, std::size_t n_fields, Fn fn)
{
  std::string line;
  std::size_t row = 0;
  if (!std::getline(in, line)) {
    throw ParseError(source, 1, "missing header");
  }
  ++row;
  csv::strip_line_ending(line);
  csv::strip_bom(line);
  if (line != header) {
    throw ParseError(source, row, "expected header '" + header + "'");
  }
  while (std::getline(in, line)) {
    ++row;
    csv::strip_line_ending(line);
    if (line.empty()) {
      continue;
    }
    const auto fields = csv::split(line);
    if (fields.size() != n_fields) {
      throw ParseError(source, row, fmt::format("expected {} fields, got {}", n_fields, fields.size()));
    }
    fn(fields, row);
  }
}

struct FieldParser
{
  const std::string & source;
  std::size_t row;

  Variant variant(std::string_view f) const
  {
    const auto v = parse_variant(f);
    if (!v) {
      fail("unknown variant", f);
    }
    return *v;
  }
  double number(std::string_view f, const char * what) const
  {
    const auto v = csv::parse_double(f);
    if (!v || !std::isfinite(*v)) {
      fail(what, f);
    }
    return *v;
  }
  std::optional<double> optional_number(std::string_view f, const char * what) const
  {
    if (f.empty()) {
      return std::nullopt;
    }
    return number(f, what);
  }
  std::uint64_t uint(std::string_view f, const char * what) const
  {
    const auto v = csv::parse_uint(f);
    if (!v) {
      fail(what, f);
    }
    return *v;
  }
  bool boolean(std::string_view f) const
  {
    if (f == "true") {
      return true;
    }
    if (f == "false") {
      return false;
    }
    fail("invalid detected flag", f);
  }
  [[noreturn]] void fail(const char * what, std::string_view f) const
  {
    throw ParseError(source, row, fmt::format("{} '{}'", what, f));
  }
};

}  // namespace

std::vector<ResultRow> read_results_csv(std::istream & in, const std::string & source)
{
  std::vector<ResultRow> rows;
  for_each_row(
    in, source, "variant,fog,seed,detected,tta_s,frames,mean_density_pts_per_deg", 7,
    [&](const std::vector<std::string_view> & f, std::size_t row) {
      const FieldParser p{source, row};
      ResultRow r{
        p.variant(f[0]),
        p.number(f[1], "invalid fog"),
        p.uint(f[2], "invalid seed"),
        p.boolean(f[3]),
        p.optional_number(f[4], "invalid tta_s"),
        static_cast<std::size_t>(p.uint(f[5], "invalid frames")),
        p.optional_number(f[6], "invalid mean density")};
      if (r.detected != r.tta.has_value()) {
        throw ParseError(source, row, "tta_s must be present iff detected");
      }
      rows.push_back(r);
    });
  return rows;
}

std::vector<DensityRow> read_density_csv(std::istream & in, const std::string & source)
{
  std::vector<DensityRow> rows;
  for_each_row(
    in, source, "variant,fog,seed,frame,points_in_roi,roi_width_deg,density_pts_per_deg", 7,
    [&](const std::vector<std::string_view> & f, std::size_t row) {
      const FieldParser p{source, row};
      rows.push_back(
        {p.variant(f[0]), p.number(f[1], "invalid fog"), p.uint(f[2], "invalid seed"),
         static_cast<std::size_t>(p.uint(f[3], "invalid frame")),
         static_cast<std::size_t>(p.uint(f[4], "invalid points_in_roi")),
         p.number(f[5], "invalid roi_width_deg"), p.number(f[6], "invalid density")});
    });
  return rows;
}

std::vector<FailureRow> read_failures_csv(std::istream & in, const std::string & source)
{
  std::vector<FailureRow> rows;
  for_each_row(
    in, source, "variant,fog,seed,reason", 4, [&](const std::vector<std::string_view> & f, std::size_t row) {
      const FieldParser p{source, row};
      rows.push_back(
        {p.variant(f[0]), p.number(f[1], "invalid fog"), p.uint(f[2], "invalid seed"), std::string(f[3])});
    });
  return rows;
}

const CellSummary * ReportSummary::find(Variant v, double fog) const
{
  const auto it = std::find_if(cells.begin(), cells.end(), [&](const CellSummary & c) {
    return c.variant == v && c.fog == fog;
  });
  return it == cells.end() ? nullptr : &*it;
}

ReportSummary summarize(
  const std::vector<ResultRow> & results, const std::vector<DensityRow> & density,
  const std::vector<FailureRow> & failures)
{
  struct Acc
  {
    CellSummary cell;
    std::vector<double> tta;
    std::vector<double> density;
  };
  std::map<std::tuple<Variant, double>, Acc> cells;
  auto cell = [&](Variant v, double fog) -> Acc & {
    auto & a = cells[{v, fog}];
    a.cell.variant = v;
    a.cell.fog = fog;
    return a;
  };
  for (const auto & r : results) {
    auto & a = cell(r.variant, r.fog);
    ++a.cell.runs;
    if (r.detected) {
      ++a.cell.detections;
      a.tta.push_back(*r.tta);
    }
  }
  for (const auto & d : density) {
    cell(d.variant, d.fog).density.push_back(d.density);
  }
  for (const auto & f : failures) {
    ++cell(f.variant, f.fog).cell.failures;
  }

  ReportSummary summary;
  summary.version = kVersion;
  for (auto & [key, a] : cells) {
    if (!a.tta.empty()) {
      a.cell.tta = quartiles(a.tta);
    }
    if (!a.density.empty()) {
      a.cell.density = quartiles(a.density);
    }
    summary.cells.push_back(a.cell);
  }
  return summary;
}

ReportSummary summarize_results_dir(const std::filesystem::path & dir)
{
  auto open = [](const std::filesystem::path & p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      throw Error("cannot open '" + p.string() + "'");
    }
    return in;
  };
  const auto results_path = dir / "results.csv";
  const auto density_path = dir / "density_samples.csv";
  const auto failures_path = dir / "failures.csv";

  auto results_in = open(results_path);
  const auto results = read_results_csv(results_in, results_path.string());
  auto density_in = open(density_path);
  const auto density = read_density_csv(density_in, density_path.string());
  std::vector<FailureRow> failures;
  if (std::filesystem::exists(failures_path)) {
    auto failures_in = open(failures_path);
    failures = read_failures_csv(failures_in, failures_path.string());
  }
  return summarize(results, density, failures);
}

std::string summary_to_json(const ReportSummary & summary)
{
  using nlohmann::ordered_json;
  auto quart = [](const std::optional<Quartiles> & q) -> ordered_json {
    if (!q) {
      return nullptr;
    }
    return {{"q1", q->q1}, {"median", q->median}, {"q3", q->q3}};
  };
  ordered_json doc;
  doc["version"] = summary.version;
  doc["quartile_method"] = "linear";
  doc["cells"] = ordered_json::array();
  for (const auto & c : summary.cells) {
    doc["cells"].push_back({
      {"variant", std::string(to_string(c.variant))},
      {"fog", c.fog},
      {"runs", c.runs},
      {"failures", c.failures},
      {"detections", c.detections},
      {"tta_s", quart(c.tta)},
      {"density_pts_per_deg", quart(c.density)},
    });
  }
  return doc.dump(2) + "\n";
}

std::string render_table(const ReportSummary & summary)
{
  auto q = [](const std::optional<Quartiles> & v, int prec) {
    if (!v) {
      return fmt::format("{:>26}", "-");
    }
    return fmt::format("{:>8.{}f} {:>8.{}f} {:>8.{}f}", v->q1, prec, v->median, prec, v->q3, prec);
  };
  std::string out = fmt::format(
    "{:<22} {:>5} {:>5} {:>5} {:>5} | {:^26} | {:^26}\n", "variant", "fog", "runs", "fail", "det",
    "TTA s (q1 med q3)", "density pts/deg (q1 med q3)");
  out += std::string(out.size() - 1, '-') + "\n";
  for (const auto & c : summary.cells) {
    out += fmt::format(
      "{:<22} {:>5} {:>5} {:>5} {:>5} | {} | {}\n", to_string(c.variant), fmt::format("{}", c.fog), c.runs,
      c.failures, c.detections, q(c.tta, 3), q(c.density, 4));
  }
  return out;
}

}  // namespace gazelidar
