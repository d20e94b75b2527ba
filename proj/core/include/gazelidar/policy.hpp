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

#include "gazelidar/atmosphere.hpp"
#include "gazelidar/gaze.hpp"
#include "gazelidar/lidar.hpp"

#include <optional>
#include <string_view>

namespace gazelidar
{

enum class Variant { baseline, range, resolution, range_and_resolution };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

struct VariantConfig
{
  Variant variant{Variant::baseline};
  double p_low_ratio{0.5};       // P_low / P, in (0, 1]
  double omega_high_ratio{2.0};  // omega_high / omega, >= 1

  bool adapts_power() const { return variant == Variant::range || variant == Variant::range_and_resolution; }
  bool adapts_spin() const { return variant == Variant::resolution || variant == Variant::range_and_resolution; }

  /// Throws DomainError when a ratio is outside its domain.
  void validate() const;
};

/// Two power levels: p_low inside the driver's focus, p_high elsewhere.
struct RangePolicy
{
  double p_low;
  double p_high;
};

/// Two spin rates: omega_high inside the driver's focus, omega_low elsewhere.
struct ResolutionPolicy
{
  double omega_high;
  double omega_low;
};

/// Raises the power outside the focus region so the angle-averaged power stays
/// at P: (delta_driver * p_low + (2π - delta_driver) * p_high) / 2π = P.
RangePolicy solve_power_levels(double p_avg, double delta_driver, double p_low);

/// Slows the spin outside the focus region so one revolution still takes 2π/ω:
/// delta_driver / omega_high + (2π - delta_driver) / omega_low = 2π / ω.
ResolutionPolicy solve_spin_rates(double omega, double delta_driver, double omega_high);

/// Two-level scan plan for the variant: the region of focus gets (p_low,
/// omega_high) for the adapted quantities, the region of interest (p_high,
/// omega_low); non-adapted quantities stay at (P, ω). The baseline ignores the
/// partition entirely.
ScanPlan build_scan_plan(
  const VariantConfig & variant, const ArcSet & rof, const ArcSet & roi,
  const SensorCalibration & cal, double omega, double pulse_rate);

}  // namespace gazelidar
