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

#include "gazelidar/angles.hpp"
#include "gazelidar/atmosphere.hpp"
#include "gazelidar/gaze.hpp"
#include "gazelidar/policy.hpp"
#include "gazelidar/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gazelidar
{

struct StaticObstacleConfig
{
  ObstacleId id{0};
  Vec2 center;
  double heading{0.0};  // radians
  double length{0.0};   // meters
  double width{0.0};    // meters
};

/// T-intersection: the ego waits on the stem, the cross road runs perpendicular
/// to the ego->conflict direction through the conflict point, and one vehicle
/// approaches from each side along it.
struct ScenarioConfig
{
  Vec2 ego_position{0.0, 0.0};
  Vec2 conflict_point{0.0, 10.0};
  double vehicle_length{4.5};
  double vehicle_width{2.0};
  double vehicle_speed{50.0 / 3.6};  // m/s
  double spawn_distance{120.0};      // m from the conflict point
  double spawn_jitter{0.0};          // m, uniform +/- per vehicle, drawn from the seed
  ObstacleId left_vehicle_id{1};
  ObstacleId right_vehicle_id{2};
  std::vector<StaticObstacleConfig> static_obstacles;
};

struct LidarConfig
{
  double pulse_rate{7812.5};  // pulses/s
  SensorCalibration calibration;
};

struct AtmosphereConfig
{
  double kappa{0.01};  // 1/m per unit fog fraction
  bool dropout{false};
};

enum class GazeMode { look_left, fixed, trace };

struct GazeConfig
{
  GazeMode mode{GazeMode::look_left};
  double fixed_theta{0.0};  // radians, mode == fixed
  std::filesystem::path trace_path;  // mode == trace, resolved against the config directory
  double eta{0.5};
  AcuityFunction acuity{AcuityFunction::boxcar(deg_to_rad(30.0))};
};

struct RunConfig
{
  ScenarioConfig scenario;
  std::vector<VariantConfig> variants;
  std::vector<double> fog_fractions;
  std::vector<std::uint64_t> seeds;
  double frame_rate{20.0};  // Hz, one revolution per frame
  GazeConfig gaze;
  LidarConfig lidar;
  AtmosphereConfig atmosphere;
  double max_sim_time{15.0};  // s
  std::size_t min_points{1};
};

struct Diagnostic
{
  std::string field;  // JSON path, e.g. "variants[1].p_low_ratio"
  std::string message;
};

std::string format_diagnostic(const std::string & source, const Diagnostic & d);

struct ConfigLoadResult
{
  std::optional<RunConfig> config;  // set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

/// Schema check and conversion. Angles are degrees in the document; everything
/// else is SI. Unknown keys are diagnostics.
ConfigLoadResult parse_run_config(std::string_view json_text, const std::filesystem::path & base_dir);

ConfigLoadResult read_run_config(const std::filesystem::path & path);

/// Reads and parses; throws ValidationError carrying every diagnostic.
RunConfig load_run_config(const std::filesystem::path & path);

}  // namespace gazelidar
