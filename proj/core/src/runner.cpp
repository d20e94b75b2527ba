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

#include "gazelidar/runner.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <thread>
#include <tuple>

namespace gazelidar
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_uniform(std::mt19937_64 & rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Unit vector pointing to the ego's left, across the stem of the T.
Vec2 left_axis(const ScenarioConfig & s)
{
  const Vec2 fwd = s.conflict_point - s.ego_position;
  const double n = fwd.norm();
  return {-fwd.y / n, fwd.x / n};
}

std::string fog_label(double fog) { return fmt::format("{}", fog); }

}  // namespace

Scene build_scene(const ScenarioConfig & s, std::uint64_t seed)
{
  double left_distance = s.spawn_distance;
  double right_distance = s.spawn_distance;
  if (s.spawn_jitter > 0.0) {
    std::mt19937_64 rng(splitmix64(seed));
    left_distance += s.spawn_jitter * (2.0 * unit_uniform(rng) - 1.0);
    right_distance += s.spawn_jitter * (2.0 * unit_uniform(rng) - 1.0);
  }

  const Vec2 left = left_axis(s);
  const double heading_right = std::atan2(left.y, left.x);  // travel direction of the right vehicle

  Scene scene;
  scene.ego_position = s.ego_position;
  scene.conflict_point = s.conflict_point;

  ObstacleBox lv;
  lv.id = s.left_vehicle_id;
  lv.center = s.conflict_point + left * left_distance;
  lv.heading = normalize_angle(heading_right + kPi);
  lv.half_length = 0.5 * s.vehicle_length;
  lv.half_width = 0.5 * s.vehicle_width;
  lv.speed = s.vehicle_speed;
  scene.obstacles.push_back(lv);

  ObstacleBox rv = lv;
  rv.id = s.right_vehicle_id;
  rv.center = s.conflict_point - left * right_distance;
  rv.heading = normalize_angle(heading_right);
  scene.obstacles.push_back(rv);

  for (const auto & o : s.static_obstacles) {
    ObstacleBox b;
    b.id = o.id;
    b.center = o.center;
    b.heading = o.heading;
    b.half_length = 0.5 * o.length;
    b.half_width = 0.5 * o.width;
    b.speed = 0.0;
    scene.obstacles.push_back(b);
  }
  return scene;
}

double look_left_bearing(const ScenarioConfig & s)
{
  const Vec2 spawn = s.conflict_point + left_axis(s) * s.spawn_distance;
  const Vec2 d = spawn - s.ego_position;
  return normalize_angle(std::atan2(d.y, d.x));
}

GazeTrace make_gaze_trace(const RunConfig & config)
{
  switch (config.gaze.mode) {
    case GazeMode::look_left:
      return GazeTrace::constant(look_left_bearing(config.scenario), config.gaze.eta);
    case GazeMode::fixed:
      return GazeTrace::constant(config.gaze.fixed_theta, config.gaze.eta);
    case GazeMode::trace:
      return GazeTrace::load(config.gaze.trace_path, config.gaze.eta);
  }
  throw Error("unknown gaze mode");
}

std::vector<Diagnostic> check_run_config(const RunConfig & config)
{
  std::vector<Diagnostic> diags;
  try {
    validate(build_scene(config.scenario, 0));
  } catch (const Error & e) {
    diags.push_back({"scenario", e.what()});
  }

  std::optional<GazeTrace> trace;
  try {
    trace = make_gaze_trace(config);
  } catch (const Error & e) {
    diags.push_back({"gaze.trace", e.what()});
  }

  const double omega = kTwoPi * config.frame_rate;
  const auto & cal = config.lidar.calibration;
  if (config.lidar.pulse_rate / config.frame_rate < 1.0) {
    diags.push_back({"lidar.pulse_rate_hz", "fewer than one pulse per revolution"});
  }
  if (!trace) {
    return diags;
  }

  for (std::size_t e = 0; e < trace->entries().size(); ++e) {
    const GazeState gaze = trace->at(trace->entries()[e].t);
    const ArcSet rof = compute_rof(gaze, config.gaze.acuity);
    const ArcSet roi = compute_roi(rof);
    const std::string when = fmt::format(" (gaze sample {}, theta_g {:.3f} deg)", e, rad_to_deg(gaze.theta_g));
    if (roi.empty()) {
      diags.push_back({"gaze.acuity", "region of focus covers the full circle; region of interest is empty" + when});
    }
    for (std::size_t i = 0; i < config.variants.size(); ++i) {
      const std::string field = "variants[" + std::to_string(i) + "]";
      try {
        (void)build_scan_plan(config.variants[i], rof, roi, cal, omega, config.lidar.pulse_rate);
      } catch (const DegeneratePartitionError & ex) {
        diags.push_back({field, std::string("degenerate partition: ") + ex.what() + when});
      } catch (const EyeSafetyError & ex) {
        diags.push_back({field + ".p_low_ratio", std::string("eye-safety cap: ") + ex.what() + when});
      } catch (const DomainError & ex) {
        diags.push_back({field, std::string("solver domain: ") + ex.what() + when});
      }
    }
  }
  return diags;
}

std::optional<double> RunRecord::mean_density() const
{
  if (density.empty()) {
    return std::nullopt;
  }
  double sum = 0.0;
  for (const auto & s : density) {
    sum += s.density;
  }
  return sum / static_cast<double>(density.size());
}

RunRecord run_single(const RunConfig & config, const RunSlice & slice, const GazeTrace & gaze)
{
  const auto wall_start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.variant = slice.variant;
  rec.fog_fraction = slice.fog_fraction;
  rec.seed = slice.seed;

  try {
    const Scene initial = build_scene(config.scenario, slice.seed);
    validate(initial);
    const FogCondition fog = fog_from_fraction(slice.fog_fraction, config.atmosphere.kappa);
    const auto & cal = config.lidar.calibration;
    const double omega = kTwoPi * config.frame_rate;
    const ObstacleId target = config.scenario.right_vehicle_id;
    const auto last_frame =
      static_cast<std::size_t>(std::floor(config.max_sim_time * config.frame_rate + 1e-9));

    for (std::size_t k = 0; k <= last_frame; ++k) {
      const double t = static_cast<double>(k) / config.frame_rate;
      const Scene scene = advance(initial, t);
      const GazeState g = gaze.at(t);
      const ArcSet rof = compute_rof(g, config.gaze.acuity);
      const ArcSet roi = compute_roi(rof);
      assert(std::abs(rof.total_width() + roi.total_width() - kTwoPi) < 1e-12);

      const ScanPlan plan =
        build_scan_plan(slice.variant, rof, roi, cal, omega, config.lidar.pulse_rate);
#ifndef NDEBUG
      {
        double power = 0.0;
        for (const auto & s : plan.segments()) {
          power += s.width() * s.power;
        }
        assert(std::abs(power / kTwoPi - cal.p_nominal) <= 1e-12 * cal.p_nominal);
        assert(std::abs(plan.revolution_period() - kTwoPi / omega) <= 1e-12 * (kTwoPi / omega));
      }
#endif

      PointCloud cloud = scan_revolution(scene, plan, fog, cal, t);
      if (config.atmosphere.dropout) {
        cloud = apply_dropout(cloud, fog, splitmix64(slice.seed ^ splitmix64(k)));
      }
      rec.frames = k + 1;
      rec.density.push_back(density(cloud, roi, k));

      if (detect(cloud, target, config.min_points)) {
        const ObstacleBox * box = scene.find(target);
        DetectionEvent ev;
        ev.frame_index = k;
        ev.time = t;
        ev.target_id = target;
        ev.target_distance_to_conflict = (box->center - scene.conflict_point).norm();
        rec.tta = tta_at_detection(ev, box->speed);
        rec.detection = ev;
        break;
      }
    }
  } catch (const Error & e) {
    rec.failure = e.what();
  }

  rec.wall_time =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return rec;
}

RunRecord run_single(const RunConfig & config, const RunSlice & slice)
{
  return run_single(config, slice, make_gaze_trace(config));
}

std::vector<RunRecord> run_sweep(const RunConfig & config, unsigned jobs)
{
  const GazeTrace gaze = make_gaze_trace(config);

  std::vector<RunSlice> slices;
  for (const auto & v : config.variants) {
    for (const double fog : config.fog_fractions) {
      for (const auto seed : config.seeds) {
        slices.push_back({v, fog, seed});
      }
    }
  }

  std::vector<RunRecord> records(slices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < slices.size(); i = next++) {
      records[i] = run_single(config, slices[i], gaze);
    }
  };
  const unsigned n_threads =
    std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(slices.size(), 1)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::stable_sort(records.begin(), records.end(), [](const RunRecord & a, const RunRecord & b) {
    return std::tuple(a.variant.variant, a.fog_fraction, a.seed) <
           std::tuple(b.variant.variant, b.fog_fraction, b.seed);
  });
  return records;
}

void write_results_csv(std::ostream & out, const std::vector<RunRecord> & records)
{
  out << "variant,fog,seed,detected,tta_s,frames,mean_density_pts_per_deg\n";
  for (const auto & r : records) {
    const auto mean = r.mean_density();
    out << fmt::format(
      "{},{},{},{},{},{},{}\n", to_string(r.variant.variant), fog_label(r.fog_fraction), r.seed,
      r.detection ? "true" : "false", r.tta ? fmt::format("{:.6f}", *r.tta) : "", r.frames,
      mean ? fmt::format("{:.6f}", *mean) : "");
  }
}

void write_density_csv(std::ostream & out, const std::vector<RunRecord> & records)
{
  out << "variant,fog,seed,frame,points_in_roi,roi_width_deg,density_pts_per_deg\n";
  for (const auto & r : records) {
    for (const auto & s : r.density) {
      out << fmt::format(
        "{},{},{},{},{},{:.6f},{:.6f}\n", to_string(r.variant.variant), fog_label(r.fog_fraction),
        r.seed, s.frame_index, s.points_in_roi, s.roi_width_deg, s.density);
    }
  }
}

void write_failures_csv(std::ostream & out, const std::vector<RunRecord> & records)
{
  out << "variant,fog,seed,reason\n";
  for (const auto & r : records) {
    if (!r.failure) {
      continue;
    }
    std::string reason = *r.failure;
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    out << fmt::format(
      "{},{},{},{}\n", to_string(r.variant.variant), fog_label(r.fog_fraction), r.seed, reason);
  }
}

}  // namespace gazelidar
