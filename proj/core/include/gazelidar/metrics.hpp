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

#include "gazelidar/gaze.hpp"
#include "gazelidar/lidar.hpp"
#include "gazelidar/scene.hpp"

#include <cstddef>

namespace gazelidar
{

struct DetectionEvent
{
  std::size_t frame_index{0};
  double time{0.0};  // seconds, frame_index / frame_rate
  ObstacleId target_id{0};
  double target_distance_to_conflict{0.0};  // meters
};

struct DensitySample
{
  std::size_t frame_index{0};
  std::size_t points_in_roi{0};
  double roi_width_deg{0.0};
  double density{0.0};  // returns per degree
};

std::size_t count_target_returns(const PointCloud & cloud, ObstacleId target_id);

/// First-point heuristic: the target counts as detected once the revolution holds
/// at least `min_points` returns attributed to it.
bool detect(const PointCloud & cloud, ObstacleId target_id, std::size_t min_points = 1);

/// Time for the target to reach the conflict point at constant speed.
double tta_at_detection(const DetectionEvent & event, double target_speed);

/// Returns (not fired rays) whose azimuth falls in the region of interest, per degree.
DensitySample density(const PointCloud & cloud, const ArcSet & roi, std::size_t frame_index = 0);

}  // namespace gazelidar
