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

namespace gazelidar
{

struct FogCondition
{
  double fog_fraction{0.0};  // [0, 1]
  double sigma{0.0};         // extinction coefficient, 1/m
};

/// Linear surrogate from a fog fraction to an extinction coefficient:
/// sigma = kappa * fraction.
FogCondition fog_from_fraction(double fog_fraction, double kappa);

struct SensorCalibration
{
  double p_nominal{1.0};    // W, average power of the non-adaptive sensor
  double r_nominal{100.0};  // m, clear-air range at p_nominal
  double p_max_ratio{4.0};  // eye-safety cap on emitted power, as a multiple of p_nominal

  /// Received-power floor: p_nominal / r_nominal^2.
  double detection_constant() const { return p_nominal / (r_nominal * r_nominal); }
  double p_max() const { return p_max_ratio * p_nominal; }
};

/// Received power p * exp(-2 sigma r) / r^2 for a target at range r.
double received_power(double p_emit, double sigma, double r);

/// Largest range at which the received power still reaches the detection
/// constant. Bisection on [1e-3, 10 r_nominal] down to a 1e-6 m bracket; the
/// lower bracket end is returned so the link budget holds at the result.
double effective_range(double p_emit, const FogCondition & fog, const SensorCalibration & cal);

}  // namespace gazelidar
