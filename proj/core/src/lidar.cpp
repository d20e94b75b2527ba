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

#include "gazelidar/lidar.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

namespace gazelidar
{

ScanPlan::ScanPlan(std::vector<ScanSegment> segments, double pulse_rate) : pulse_rate_(pulse_rate)
{
  if (!(pulse_rate > 0.0) || !std::isfinite(pulse_rate)) {
    throw DomainError("scan plan: pulse_rate must be positive");
  }
  if (segments.empty()) {
    throw DomainError("scan plan: no segments");
  }
  double cursor = 0.0;
  for (const auto & s : segments) {
    if (s.begin != cursor || !(s.end > s.begin)) {
      throw DomainError("scan plan: segments must tile [0, 2pi) in order");
    }
    if (!(s.power > 0.0) || !(s.spin_rate > 0.0)) {
      throw DomainError("scan plan: power and spin rate must be positive");
    }
    cursor = s.end;
    if (!segments_.empty() && segments_.back().power == s.power &&
        segments_.back().spin_rate == s.spin_rate) {
      segments_.back().end = s.end;
    } else {
      segments_.push_back(s);
    }
  }
  if (cursor != kTwoPi) {
    throw DomainError("scan plan: segments must end at 2pi");
  }
  for (const auto & s : segments_) {
    period_ += s.dwell();
  }
  const double pulses = pulse_rate_ * period_;
  const double nearest = std::round(pulses);
  const double snapped = std::abs(pulses - nearest) <= 1e-9 * std::max(1.0, pulses) ? nearest
                                                                                     : std::floor(pulses);
  rays_ = static_cast<std::size_t>(snapped);
}

ScanPlan ScanPlan::uniform(double power, double spin_rate, double pulse_rate)
{
  return ScanPlan({{0.0, kTwoPi, power, spin_rate}}, pulse_rate);
}

std::size_t ScanPlan::segment_index_at(double beta) const
{
  const double a = normalize_angle(beta);
  const auto it = std::upper_bound(
    segments_.begin(), segments_.end(), a, [](double v, const ScanSegment & s) { return v < s.end; });
  if (it == segments_.end()) {
    return segments_.size() - 1;
  }
  return static_cast<std::size_t>(it - segments_.begin());
}

double angular_spacing(const ScanPlan & plan, double beta)
{
  return plan.spin_rate_at(beta) / plan.pulse_rate();
}

PointCloud scan_revolution(
  const Scene & scene, const ScanPlan & plan, const FogCondition & fog,
  const SensorCalibration & cal, double start_time)
{
  const auto & segments = plan.segments();
  PointCloud cloud;
  cloud.frame_time = start_time;
  cloud.rays_per_segment.assign(segments.size(), 0);
  cloud.max_range_per_segment.reserve(segments.size());
  for (const auto & s : segments) {
    cloud.max_range_per_segment.push_back(effective_range(s.power, fog, cal));
  }

  const RayCaster caster(scene);
  const std::size_t n = plan.rays_per_revolution();
  std::size_t seg = 0;
  double seg_start_time = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double tau = static_cast<double>(k) / plan.pulse_rate();
    double beta = segments[seg].begin + (tau - seg_start_time) * segments[seg].spin_rate;
    while (beta >= segments[seg].end && seg + 1 < segments.size()) {
      seg_start_time += segments[seg].dwell();
      ++seg;
      beta = segments[seg].begin + (tau - seg_start_time) * segments[seg].spin_rate;
    }
    if (beta >= kTwoPi) {
      break;
    }
    ++cloud.rays_fired;
    ++cloud.rays_per_segment[seg];
    if (const auto hit =
          caster.cast(scene.ego_position, beta, cloud.max_range_per_segment[seg])) {
      cloud.returns.push_back({beta, hit->range, hit->id});
    }
  }
  return cloud;
}

PointCloud apply_dropout(const PointCloud & cloud, const FogCondition & fog, std::uint64_t seed)
{
  PointCloud out = cloud;
  if (fog.sigma <= 0.0) {
    return out;
  }
  std::mt19937_64 rng(seed);
  out.returns.clear();
  for (const auto & r : cloud.returns) {
    // top 53 bits -> uniform [0, 1), independent of the library's distributions
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < std::exp(-fog.sigma * r.range)) {
      out.returns.push_back(r);
    }
  }
  return out;
}

void write_point_cloud_csv(std::ostream & out, const PointCloud & cloud, std::size_t frame, bool header)
{
  if (header) {
    out << "frame,angle_deg,range_m,hit_id\n";
  }
  for (const auto & r : cloud.returns) {
    out << fmt::format("{},{:.6f},{:.6f},{}\n", frame, rad_to_deg(r.angle), r.range, r.hit_id);
  }
}

}  // namespace gazelidar
