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

#include "gazelidar/config.hpp"
#include "gazelidar/gaze.hpp"
#include "gazelidar/metrics.hpp"
#include "gazelidar/policy.hpp"
#include "gazelidar/scene.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gazelidar
{

/// Scene at t = 0: both approaching vehicles plus static structures. Spawn
/// distances are jittered from the seed when `spawn_jitter` is positive.
Scene build_scene(const ScenarioConfig & scenario, std::uint64_t seed);

/// Bearing from the ego to the nominal (unjittered) left vehicle spawn point.
double look_left_bearing(const ScenarioConfig & scenario);

/// Gaze schedule for the configured mode; reads the trace file in trace mode.
GazeTrace make_gaze_trace(const RunConfig & config);

/// Semantic feasibility beyond the schema: scene validity, partition and solver
/// feasibility for every adaptive variant at every gaze sample, eye-safety cap.
std::vector<Diagnostic> check_run_config(const RunConfig & config);

struct RunSlice
{
  VariantConfig variant;
  double fog_fraction{0.0};
  std::uint64_t seed{0};
};

struct RunRecord
{
  VariantConfig variant;
  double fog_fraction{0.0};
  std::uint64_t seed{0};
  std::optional<DetectionEvent> detection;
  std::optional<double> tta;  // seconds, present iff detection
  std::vector<DensitySample> density;
  std::size_t frames{0};
  double wall_time{0.0};  // seconds; diagnostic only, never serialized
  std::optional<std::string> failure;

  std::optional<double> mean_density() const;
};

/// One scenario run: per frame, the gaze sample drives the focus/interest
/// partition, the variant's plan is rebuilt, one revolution is scanned, and the
/// right vehicle is tested for detection. Stops at detection or max_sim_time.
RunRecord run_single(const RunConfig & config, const RunSlice & slice, const GazeTrace & gaze);
RunRecord run_single(const RunConfig & config, const RunSlice & slice);

/// Every (variant, fog, seed) combination, sorted by variant, fog, then seed.
/// Runs are independent and are spread over `jobs` worker threads.
std::vector<RunRecord> run_sweep(const RunConfig & config, unsigned jobs = 1);

void write_results_csv(std::ostream & out, const std::vector<RunRecord> & records);
void write_density_csv(std::ostream & out, const std::vector<RunRecord> & records);
void write_failures_csv(std::ostream & out, const std::vector<RunRecord> & records);

}  // namespace gazelidar
