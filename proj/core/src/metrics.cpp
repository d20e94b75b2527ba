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

#include "gazelidar/metrics.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/error.hpp"

#include <algorithm>
#include <cmath>

namespace gazelidar
{

std::size_t count_target_returns(const PointCloud & cloud, ObstacleId target_id)
{
  return static_cast<std::size_t>(
    std::count_if(cloud.returns.begin(), cloud.returns.end(), [target_id](const LidarReturn & r) {
      return contains_point_of(r.hit_id, target_id);
    }));
}

bool detect(const PointCloud & cloud, ObstacleId target_id, std::size_t min_points)
{
  if (min_points < 1) {
    throw DomainError("detect: min_points must be at least 1");
  }
  return count_target_returns(cloud, target_id) >= min_points;
}

double tta_at_detection(const DetectionEvent & event, double target_speed)
{
  if (!(target_speed > 0.0) || !std::isfinite(target_speed)) {
    throw DomainError("tta_at_detection: target speed must be positive");
  }
  return event.target_distance_to_conflict / target_speed;
}

DensitySample density(const PointCloud & cloud, const ArcSet & roi, std::size_t frame_index)
{
  if (roi.empty()) {
    throw DomainError("density: region of interest is empty");
  }
  DensitySample s;
  s.frame_index = frame_index;
  s.points_in_roi = static_cast<std::size_t>(std::count_if(
    cloud.returns.begin(), cloud.returns.end(),
    [&roi](const LidarReturn & r) { return roi.contains(r.angle); }));
  s.roi_width_deg = rad_to_deg(roi.total_width());
  s.density = static_cast<double>(s.points_in_roi) / s.roi_width_deg;
  return s;
}

}  // namespace gazelidar
