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

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.

#pragma once

#include <gazelidar/gaze.hpp>
#include <gazelidar/lidar.hpp>
#include <gazelidar/scene.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace gazelidar::oracle
{

/// Nearest intersection against all four edge segments of every box, computed
/// from first principles with a 2x2 cross-product solve per segment.
inline std::optional<RayHit> brute_force_cast(const Scene & scene, Vec2 origin, double angle, double max_range)
{
  const double dx = std::cos(angle);
  const double dy = std::sin(angle);
  std::optional<RayHit> best;
  for (const auto & b : scene.obstacles) {
    const double c = std::cos(b.heading);
    const double s = std::sin(b.heading);
    const double lx[4] = {b.half_length, -b.half_length, -b.half_length, b.half_length};
    const double ly[4] = {b.half_width, b.half_width, -b.half_width, -b.half_width};
    double px[4];
    double py[4];
    for (int i = 0; i < 4; ++i) {
      px[i] = b.center.x + c * lx[i] - s * ly[i];
      py[i] = b.center.y + s * lx[i] + c * ly[i];
    }
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      const double ex = px[j] - px[i];
      const double ey = py[j] - py[i];
      const double denom = dx * ey - dy * ex;
      if (denom == 0.0) {
        continue;
      }
      const double wx = px[i] - origin.x;
      const double wy = py[i] - origin.y;
      const double t = (wx * ey - wy * ex) / denom;
      const double u = (wx * dy - wy * dx) / denom;
      if (!(t > 0.0) || t > max_range || u < 0.0 || u > 1.0) {
        continue;
      }
      if (!best || t < best->range - 1e-12 || (std::abs(t - best->range) <= 1e-12 && b.id < best->id)) {
        best = RayHit{t, b.id};
      }
    }
  }
  return best;
}

/// Solves r = sqrt(p / c) * exp(-sigma r) by fixed-point iteration; a
/// contraction whenever sigma * r < 1.
inline double fixed_point_range(double p, double sigma, double c)
{
  double r = std::sqrt(p / c);
  for (int i = 0; i < 10000; ++i) {
    const double next = std::sqrt(p / c) * std::exp(-sigma * r);
    if (std::abs(next - r) < 1e-13) {
      return next;
    }
    r = next;
  }
  return r;
}

/// Offset where a monotone acuity profile crosses eta, by bisection on [0, π].
inline double acuity_crossing(const AcuityFunction & v, double eta)
{
  double lo = 0.0;
  double hi = 3.141592653589793;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (v(mid) > eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Position after `steps` explicit steps of constant-velocity motion.
inline Vec2 step_motion(Vec2 start, double heading, double speed, double dt, int steps)
{
  Vec2 p = start;
  for (int i = 0; i < steps; ++i) {
    p.x += std::cos(heading) * speed * dt;
    p.y += std::sin(heading) * speed * dt;
  }
  return p;
}

/// Pulses landing in each segment when pulse k fires at k / pulse_rate and the
/// beam dwells width / spin_rate in each segment. Counts the integers k in the
/// half-open window [T_i, T_{i+1}) * pulse_rate, capped at n_total pulses.
inline std::vector<std::size_t> expected_rays_per_segment(
  const std::vector<ScanSegment> & segments, double pulse_rate, std::size_t n_total)
{
  std::vector<std::size_t> counts;
  double t0 = 0.0;
  for (const auto & s : segments) {
    const double t1 = t0 + (s.end - s.begin) / s.spin_rate;
    const double k0 = std::ceil(t0 * pulse_rate);
    const double k1 = std::min(std::ceil(t1 * pulse_rate), static_cast<double>(n_total));
    counts.push_back(k1 > k0 ? static_cast<std::size_t>(k1 - k0) : 0);
    t0 = t1;
  }
  return counts;
}

}  // namespace gazelidar::oracle
