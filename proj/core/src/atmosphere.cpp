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

#include "gazelidar/atmosphere.hpp"

#include "gazelidar/error.hpp"

#include <cmath>

namespace gazelidar
{

FogCondition fog_from_fraction(double fog_fraction, double kappa)
{
  if (!(fog_fraction >= 0.0 && fog_fraction <= 1.0)) {
    throw DomainError("fog fraction must lie in [0, 1]");
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be positive");
  }
  return {fog_fraction, kappa * fog_fraction};
}

double received_power(double p_emit, double sigma, double r)
{
  return p_emit * std::exp(-2.0 * sigma * r) / (r * r);
}

double effective_range(double p_emit, const FogCondition & fog, const SensorCalibration & cal)
{
  if (!(p_emit > 0.0) || !std::isfinite(p_emit)) {
    throw DomainError("effective_range: emitted power must be positive");
  }
  if (!(fog.sigma >= 0.0)) {
    throw DomainError("effective_range: sigma must be non-negative");
  }
  const double c = cal.detection_constant();
  double lo = 1e-3;
  double hi = 10.0 * cal.r_nominal;
  if (received_power(p_emit, fog.sigma, hi) >= c) {
    return hi;
  }
  if (received_power(p_emit, fog.sigma, lo) < c) {
    return lo;
  }
  while (hi - lo >= 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (received_power(p_emit, fog.sigma, mid) >= c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace gazelidar
