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

#include <gazelidar/angles.hpp>
#include <gazelidar/config.hpp>
#include <gazelidar/lidar.hpp>
#include <gazelidar/policy.hpp>
#include <gazelidar/runner.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

namespace
{

using namespace gazelidar;

Scene random_boxes(std::size_t n)
{
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> pos(-60.0, 60.0);
  std::uniform_real_distribution<double> size(0.5, 8.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  Scene s;
  for (std::size_t i = 0; i < n; ++i) {
    ObstacleBox b;
    b.id = static_cast<ObstacleId>(i + 1);
    b.center = {pos(rng), pos(rng)};
    b.heading = ang(rng);
    b.half_length = size(rng);
    b.half_width = size(rng);
    s.obstacles.push_back(b);
  }
  return s;
}

RunConfig sweep_config()
{
  return load_run_config(std::filesystem::path(GAZELIDAR_SOURCE_DIR) / "configs" / "t_intersection.json");
}

void BM_RayCast(benchmark::State & state)
{
  const Scene scene = random_boxes(static_cast<std::size_t>(state.range(0)));
  const RayCaster caster(scene);
  double angle = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(caster.cast({0.0, 0.0}, angle, 100.0));
    angle = angle + 0.0017 < kTwoPi ? angle + 0.0017 : 0.0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RayCast)->Arg(6)->Arg(10)->Arg(100);

void BM_ScanRevolution(benchmark::State & state)
{
  const RunConfig cfg = sweep_config();
  const Scene scene = build_scene(cfg.scenario, 1);
  const ArcSet rof = compute_rof(GazeState::make(look_left_bearing(cfg.scenario), 0.5), cfg.gaze.acuity);
  const auto variant = static_cast<Variant>(state.range(0));
  const ScanPlan plan = build_scan_plan(
    {variant}, rof, rof.complement(), cfg.lidar.calibration, kTwoPi * cfg.frame_rate, cfg.lidar.pulse_rate);
  const FogCondition fog = fog_from_fraction(0.5, cfg.atmosphere.kappa);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_revolution(scene, plan, fog, cfg.lidar.calibration, 0.0));
  }
  state.SetLabel(std::string(to_string(variant)));
}
BENCHMARK(BM_ScanRevolution)->DenseRange(0, 3);

void BM_RunSingle(benchmark::State & state)
{
  const RunConfig cfg = sweep_config();
  const GazeTrace gaze = make_gaze_trace(cfg);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_single(cfg, {{Variant::range_and_resolution, 0.5, 2.0}, 0.5, seed++}, gaze));
  }
}
BENCHMARK(BM_RunSingle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
