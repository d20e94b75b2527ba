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
#include "gazelidar/scene.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gazelidar
{

/// Constant power and spin rate over the azimuth interval [begin, end).
struct ScanSegment
{
  double begin{0.0};      // radians
  double end{0.0};        // radians
  double power{0.0};      // W per pulse
  double spin_rate{0.0};  // rad/s

  double width() const { return end - begin; }
  /// Time the beam spends sweeping this segment.
  double dwell() const { return width() / spin_rate; }
  bool operator==(const ScanSegment &) const = default;
};

/// Power and instantaneous spin-rate profile over one revolution, starting at
/// azimuth 0. Adjacent segments with identical settings are merged, so a
/// two-level plan with equal levels is indistinguishable from a uniform one.
class ScanPlan
{
public:
  /// Segments must tile [0, 2π) in order. Throws DomainError otherwise.
  ScanPlan(std::vector<ScanSegment> segments, double pulse_rate);

  static ScanPlan uniform(double power, double spin_rate, double pulse_rate);

  const std::vector<ScanSegment> & segments() const noexcept { return segments_; }
  double pulse_rate() const noexcept { return pulse_rate_; }
  double revolution_period() const noexcept { return period_; }

  /// Pulses fired in one revolution, floor(pulse_rate * period). Products within
  /// 1e-9 of an integer snap to it so conserved periods give equal counts.
  std::size_t rays_per_revolution() const noexcept { return rays_; }

  std::size_t segment_index_at(double beta) const;
  double power_at(double beta) const { return segments_[segment_index_at(beta)].power; }
  double spin_rate_at(double beta) const { return segments_[segment_index_at(beta)].spin_rate; }

  bool operator==(const ScanPlan &) const = default;

private:
  std::vector<ScanSegment> segments_;
  double pulse_rate_;
  double period_{0.0};
  std::size_t rays_{0};
};

/// Angle swept between consecutive pulses at azimuth beta.
double angular_spacing(const ScanPlan & plan, double beta);

struct LidarReturn
{
  double angle;  // radians, [0, 2π)
  double range;  // meters
  ObstacleId hit_id;

  bool operator==(const LidarReturn &) const = default;
};

struct PointCloud
{
  double frame_time{0.0};
  std::vector<LidarReturn> returns;
  std::size_t rays_fired{0};
  std::vector<std::size_t> rays_per_segment;  // indexed like ScanPlan::segments()
  std::vector<double> max_range_per_segment;

  bool operator==(const PointCloud &) const = default;
};

/// Fires one revolution of pulses from the ego position. Pulse k leaves at
/// start_time + k / pulse_rate; its azimuth follows the plan's piecewise-linear
/// angle-time profile. Each ray reaches as far as the link budget allows at the
/// segment's power. The scene is taken as-is (frozen for the revolution).
PointCloud scan_revolution(
  const Scene & scene, const ScanPlan & plan, const FogCondition & fog,
  const SensorCalibration & cal, double start_time);

/// Keeps each return with probability exp(-sigma * range). Deterministic in seed.
PointCloud apply_dropout(const PointCloud & cloud, const FogCondition & fog, std::uint64_t seed);

/// Writes `frame,angle_deg,range_m,hit_id` rows. `header` controls the header row.
void write_point_cloud_csv(std::ostream & out, const PointCloud & cloud, std::size_t frame, bool header);

}  // namespace gazelidar
