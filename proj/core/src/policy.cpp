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

#include "gazelidar/policy.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/error.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>

namespace gazelidar
{

namespace
{

constexpr std::array<std::string_view, 4> kVariantNames = {
  "baseline", "range", "resolution", "range_and_resolution"};

void require_partition(double delta_driver, const char * who)
{
  if (!std::isfinite(delta_driver) || !(delta_driver > 0.0) || !(delta_driver < kTwoPi)) {
    throw DegeneratePartitionError(fmt::format(
      "{}: region of focus width {:.6f} rad leaves no complementary region to rebalance", who,
      delta_driver));
  }
}

}  // namespace

std::string_view to_string(Variant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

std::optional<Variant> parse_variant(std::string_view name)
{
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == name) {
      return static_cast<Variant>(i);
    }
  }
  return std::nullopt;
}

void VariantConfig::validate() const
{
  if (!(p_low_ratio > 0.0 && p_low_ratio <= 1.0)) {
    throw DomainError(fmt::format("p_low_ratio {} outside (0, 1]", p_low_ratio));
  }
  if (!(omega_high_ratio >= 1.0) || !std::isfinite(omega_high_ratio)) {
    throw DomainError(fmt::format("omega_high_ratio {} must be finite and >= 1", omega_high_ratio));
  }
}

RangePolicy solve_power_levels(double p_avg, double delta_driver, double p_low)
{
  require_partition(delta_driver, "solve_power_levels");
  if (!(p_avg > 0.0) || !(p_low > 0.0 && p_low <= p_avg)) {
    throw DomainError("solve_power_levels: requires 0 < p_low <= P");
  }
  // written as P plus the displaced share so p_low == P returns P exactly
  const double p_high = p_avg + delta_driver * (p_avg - p_low) / (kTwoPi - delta_driver);
  return {p_low, p_high};
}

ResolutionPolicy solve_spin_rates(double omega, double delta_driver, double omega_high)
{
  require_partition(delta_driver, "solve_spin_rates");
  if (!(omega > 0.0) || !(omega_high >= omega) || !std::isfinite(omega_high)) {
    throw DomainError("solve_spin_rates: requires 0 < omega <= omega_high");
  }
  const double delta_roi = kTwoPi - delta_driver;
  // omega_high == omega makes the ratio exactly 1, so omega comes back unchanged
  const double omega_low = omega * (delta_roi / (kTwoPi - delta_driver * (omega / omega_high)));
  return {omega_high, omega_low};
}

ScanPlan build_scan_plan(
  const VariantConfig & variant, const ArcSet & rof, const ArcSet & roi,
  const SensorCalibration & cal, double omega, double pulse_rate)
{
  variant.validate();
  if (!(omega > 0.0)) {
    throw DomainError("build_scan_plan: omega must be positive");
  }
  const double p_avg = cal.p_nominal;
  if (variant.variant == Variant::baseline) {
    return ScanPlan::uniform(p_avg, omega, pulse_rate);
  }
  if (roi != rof.complement()) {
    throw DomainError("build_scan_plan: region of interest must be the complement of the region of focus");
  }

  const double delta_driver = rof.total_width();
  RangePolicy power{p_avg, p_avg};
  ResolutionPolicy spin{omega, omega};
  if (variant.adapts_power()) {
    power = solve_power_levels(p_avg, delta_driver, variant.p_low_ratio * p_avg);
    if (power.p_high > cal.p_max()) {
      throw EyeSafetyError(fmt::format(
        "build_scan_plan: p_high {:.6g} W exceeds eye-safety cap {:.6g} W", power.p_high, cal.p_max()));
    }
  }
  if (variant.adapts_spin()) {
    spin = solve_spin_rates(omega, delta_driver, variant.omega_high_ratio * omega);
  }

  std::vector<ScanSegment> segments;
  segments.reserve(rof.intervals().size() + roi.intervals().size());
  const auto & a = rof.intervals();
  const auto & b = roi.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].begin < b[j].begin)) {
      segments.push_back({a[i].begin, a[i].end, power.p_low, spin.omega_high});
      ++i;
    } else {
      segments.push_back({b[j].begin, b[j].end, power.p_high, spin.omega_low});
      ++j;
    }
  }
  return ScanPlan(std::move(segments), pulse_rate);
}

}  // namespace gazelidar
