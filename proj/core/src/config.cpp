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

#include "gazelidar/config.hpp"

#include "gazelidar/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace gazelidar
{

namespace
{

using nlohmann::json;

class Reader
{
public:
  explicit Reader(std::vector<Diagnostic> & diags) : diags_(diags) {}

  void error(const std::string & field, std::string message)
  {
    diags_.push_back({field, std::move(message)});
  }

  static std::string join(const std::string & path, std::string_view key)
  {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }

  /// Flags a non-object or unknown keys. Returns false if `j` is not an object.
  bool object(const json & j, const std::string & path, std::initializer_list<std::string_view> allowed)
  {
    if (!j.is_object()) {
      error(path.empty() ? "<root>" : path, "expected an object");
      return false;
    }
    for (const auto & [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        error(join(path, key), "unknown key");
      }
    }
    return true;
  }

  const json * member(const json & obj, std::string_view key, const std::string & path, bool required)
  {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) {
      if (required) {
        error(join(path, key), "missing required key");
      }
      return nullptr;
    }
    return &*it;
  }

  void number(const json & obj, std::string_view key, const std::string & path, double & out,
              bool required = false)
  {
    if (const json * v = member(obj, key, path, required)) {
      if (!v->is_number()) {
        error(join(path, key), "expected a number");
        return;
      }
      const double d = v->get<double>();
      if (!std::isfinite(d)) {
        error(join(path, key), "must be finite");
        return;
      }
      out = d;
    }
  }

  template <typename Int>
  void integer(const json & obj, std::string_view key, const std::string & path, Int & out,
               bool required = false)
  {
    if (const json * v = member(obj, key, path, required)) {
      if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
        error(join(path, key), "expected a non-negative integer");
        return;
      }
      const auto u = v->get<std::uint64_t>();
      if (u > std::numeric_limits<Int>::max()) {
        error(join(path, key), "integer out of range");
        return;
      }
      out = static_cast<Int>(u);
    }
  }

  void boolean(const json & obj, std::string_view key, const std::string & path, bool & out)
  {
    if (const json * v = member(obj, key, path, false)) {
      if (!v->is_boolean()) {
        error(join(path, key), "expected a boolean");
        return;
      }
      out = v->get<bool>();
    }
  }

  void vec2(const json & obj, std::string_view key, const std::string & path, Vec2 & out)
  {
    if (const json * v = member(obj, key, path, false)) {
      if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
        error(join(path, key), "expected [x, y] in meters");
        return;
      }
      out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
    }
  }

  void positive(const std::string & field, double v)
  {
    if (!(v > 0.0)) {
      error(field, "must be positive");
    }
  }

private:
  std::vector<Diagnostic> & diags_;
};

void read_scenario(Reader & r, const json & j, ScenarioConfig & s)
{
  const std::string p = "scenario";
  if (!r.object(j, p, {"ego_position_m", "conflict_point_m", "vehicle_length_m", "vehicle_width_m",
                       "vehicle_speed_mps", "spawn_distance_m", "spawn_jitter_m", "left_vehicle_id",
                       "right_vehicle_id", "static_obstacles"})) {
    return;
  }
  r.vec2(j, "ego_position_m", p, s.ego_position);
  r.vec2(j, "conflict_point_m", p, s.conflict_point);
  r.number(j, "vehicle_length_m", p, s.vehicle_length);
  r.number(j, "vehicle_width_m", p, s.vehicle_width);
  r.number(j, "vehicle_speed_mps", p, s.vehicle_speed);
  r.number(j, "spawn_distance_m", p, s.spawn_distance);
  r.number(j, "spawn_jitter_m", p, s.spawn_jitter);
  r.integer(j, "left_vehicle_id", p, s.left_vehicle_id);
  r.integer(j, "right_vehicle_id", p, s.right_vehicle_id);

  r.positive(p + ".vehicle_length_m", s.vehicle_length);
  r.positive(p + ".vehicle_width_m", s.vehicle_width);
  r.positive(p + ".vehicle_speed_mps", s.vehicle_speed);
  r.positive(p + ".spawn_distance_m", s.spawn_distance);
  if (!(s.spawn_jitter >= 0.0) || s.spawn_jitter >= s.spawn_distance) {
    r.error(p + ".spawn_jitter_m", "must lie in [0, spawn_distance_m)");
  }
  if ((s.conflict_point - s.ego_position).norm() == 0.0) {
    r.error(p + ".conflict_point_m", "must differ from ego_position_m");
  }
  if (s.left_vehicle_id == s.right_vehicle_id) {
    r.error(p + ".right_vehicle_id", "must differ from left_vehicle_id");
  }

  if (const json * list = r.member(j, "static_obstacles", p, false)) {
    const std::string lp = p + ".static_obstacles";
    if (!list->is_array()) {
      r.error(lp, "expected an array");
      return;
    }
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ip = lp + "[" + std::to_string(i) + "]";
      const json & o = (*list)[i];
      if (!r.object(o, ip, {"id", "center_m", "heading_deg", "length_m", "width_m"})) {
        continue;
      }
      StaticObstacleConfig b;
      double heading_deg = 0.0;
      r.integer(o, "id", ip, b.id, true);
      if (!o.contains("center_m")) {
        r.error(ip + ".center_m", "missing required key");
      }
      r.vec2(o, "center_m", ip, b.center);
      r.number(o, "heading_deg", ip, heading_deg);
      r.number(o, "length_m", ip, b.length, true);
      r.number(o, "width_m", ip, b.width, true);
      r.positive(ip + ".length_m", b.length);
      r.positive(ip + ".width_m", b.width);
      b.heading = deg_to_rad(heading_deg);
      s.static_obstacles.push_back(b);
    }
  }
}

void read_lidar(Reader & r, const json & j, LidarConfig & l)
{
  const std::string p = "lidar";
  if (!r.object(j, p, {"pulse_rate_hz", "p_nominal_w", "r_nominal_m", "p_max_ratio"})) {
    return;
  }
  r.number(j, "pulse_rate_hz", p, l.pulse_rate);
  r.number(j, "p_nominal_w", p, l.calibration.p_nominal);
  r.number(j, "r_nominal_m", p, l.calibration.r_nominal);
  r.number(j, "p_max_ratio", p, l.calibration.p_max_ratio);
  r.positive(p + ".pulse_rate_hz", l.pulse_rate);
  r.positive(p + ".p_nominal_w", l.calibration.p_nominal);
  r.positive(p + ".r_nominal_m", l.calibration.r_nominal);
  if (!(l.calibration.p_max_ratio >= 1.0)) {
    r.error(p + ".p_max_ratio", "must be >= 1");
  }
}

void read_atmosphere(Reader & r, const json & j, AtmosphereConfig & a)
{
  const std::string p = "atmosphere";
  if (!r.object(j, p, {"kappa_per_m", "dropout"})) {
    return;
  }
  r.number(j, "kappa_per_m", p, a.kappa);
  r.boolean(j, "dropout", p, a.dropout);
  r.positive(p + ".kappa_per_m", a.kappa);
}

void read_gaze(Reader & r, const json & j, GazeConfig & g, const std::filesystem::path & base_dir)
{
  const std::string p = "gaze";
  if (!r.object(j, p, {"mode", "theta_deg", "trace", "eta", "acuity"})) {
    return;
  }
  if (const json * m = r.member(j, "mode", p, false)) {
    const std::string mode = m->is_string() ? m->get<std::string>() : "";
    if (mode == "look_left") {
      g.mode = GazeMode::look_left;
    } else if (mode == "fixed") {
      g.mode = GazeMode::fixed;
    } else if (mode == "trace") {
      g.mode = GazeMode::trace;
    } else {
      r.error(p + ".mode", "expected one of look_left, fixed, trace");
    }
  }
  if (g.mode == GazeMode::fixed) {
    double theta_deg = 0.0;
    r.number(j, "theta_deg", p, theta_deg, true);
    g.fixed_theta = normalize_angle(deg_to_rad(theta_deg));
  } else if (j.contains("theta_deg")) {
    r.error(p + ".theta_deg", "only valid with mode \"fixed\"");
  }
  if (g.mode == GazeMode::trace) {
    if (const json * t = r.member(j, "trace", p, true)) {
      if (!t->is_string() || t->get<std::string>().empty()) {
        r.error(p + ".trace", "expected a file path");
      } else {
        const std::filesystem::path tp = t->get<std::string>();
        g.trace_path = tp.is_absolute() ? tp : base_dir / tp;
      }
    }
  } else if (j.contains("trace")) {
    r.error(p + ".trace", "only valid with mode \"trace\"");
  }
  r.number(j, "eta", p, g.eta);
  if (!(g.eta > 0.0 && g.eta <= 1.0)) {
    r.error(p + ".eta", "must lie in (0, 1]");
  }

  if (const json * a = r.member(j, "acuity", p, false)) {
    const std::string ap = p + ".acuity";
    if (!r.object(*a, ap, {"kind", "half_width_deg", "sigma_deg"})) {
      return;
    }
    std::string kind = "boxcar";
    if (const json * k = r.member(*a, "kind", ap, false)) {
      kind = k->is_string() ? k->get<std::string>() : "";
    }
    if (kind == "boxcar") {
      double hw = 30.0;
      r.number(*a, "half_width_deg", ap, hw);
      if (a->contains("sigma_deg")) {
        r.error(ap + ".sigma_deg", "only valid for kind \"gaussian\"");
      }
      if (hw > 0.0) {
        g.acuity = AcuityFunction::boxcar(deg_to_rad(hw));
      } else {
        r.error(ap + ".half_width_deg", "must be positive");
      }
    } else if (kind == "gaussian") {
      double sigma = 15.0;
      r.number(*a, "sigma_deg", ap, sigma);
      if (a->contains("half_width_deg")) {
        r.error(ap + ".half_width_deg", "only valid for kind \"boxcar\"");
      }
      if (sigma > 0.0) {
        g.acuity = AcuityFunction::gaussian(deg_to_rad(sigma));
      } else {
        r.error(ap + ".sigma_deg", "must be positive");
      }
    } else {
      r.error(ap + ".kind", "expected boxcar or gaussian");
    }
  }
}

void read_variants(Reader & r, const json & j, std::vector<VariantConfig> & out)
{
  const std::string p = "variants";
  if (!j.is_array() || j.empty()) {
    r.error(p, "expected a non-empty array");
    return;
  }
  std::set<Variant> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ip = p + "[" + std::to_string(i) + "]";
    const json & o = j[i];
    if (!r.object(o, ip, {"variant", "p_low_ratio", "omega_high_ratio"})) {
      continue;
    }
    VariantConfig v;
    if (const json * name = r.member(o, "variant", ip, true)) {
      const auto parsed = name->is_string() ? parse_variant(name->get<std::string>()) : std::nullopt;
      if (!parsed) {
        r.error(ip + ".variant", "expected baseline, range, resolution or range_and_resolution");
        continue;
      }
      v.variant = *parsed;
    } else {
      continue;
    }
    r.number(o, "p_low_ratio", ip, v.p_low_ratio);
    r.number(o, "omega_high_ratio", ip, v.omega_high_ratio);
    if (!(v.p_low_ratio > 0.0 && v.p_low_ratio <= 1.0)) {
      r.error(ip + ".p_low_ratio", "solver domain: power ratio must lie in (0, 1]");
    }
    if (!(v.omega_high_ratio >= 1.0)) {
      r.error(ip + ".omega_high_ratio", "solver domain: spin ratio must be >= 1");
    }
    if (!seen.insert(v.variant).second) {
      r.error(ip + ".variant", "duplicate variant");
    }
    out.push_back(v);
  }
}

}  // namespace

std::string format_diagnostic(const std::string & source, const Diagnostic & d)
{
  return source + ": " + d.field + ": " + d.message;
}

ConfigLoadResult parse_run_config(std::string_view json_text, const std::filesystem::path & base_dir)
{
  ConfigLoadResult result;
  Reader r(result.diagnostics);

  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error & e) {
    r.error("<document>", std::string("invalid JSON: ") + e.what());
    return result;
  }

  RunConfig c;
  if (!r.object(doc, "", {"scenario", "variants", "fog_fractions", "seeds", "frame_rate_hz", "gaze",
                          "lidar", "atmosphere", "max_sim_time_s", "detection"})) {
    return result;
  }
  if (const json * s = r.member(doc, "scenario", "", false)) {
    read_scenario(r, *s, c.scenario);
  }
  if (const json * v = r.member(doc, "variants", "", true)) {
    read_variants(r, *v, c.variants);
  }
  if (const json * f = r.member(doc, "fog_fractions", "", true)) {
    if (!f->is_array() || f->empty()) {
      r.error("fog_fractions", "expected a non-empty array");
    } else {
      std::set<double> seen;
      for (std::size_t i = 0; i < f->size(); ++i) {
        const std::string ip = "fog_fractions[" + std::to_string(i) + "]";
        const json & e = (*f)[i];
        if (!e.is_number() || !(e.get<double>() >= 0.0 && e.get<double>() <= 1.0)) {
          r.error(ip, "expected a number in [0, 1]");
          continue;
        }
        if (!seen.insert(e.get<double>()).second) {
          r.error(ip, "duplicate fog fraction");
        }
        c.fog_fractions.push_back(e.get<double>());
      }
    }
  }
  if (const json * s = r.member(doc, "seeds", "", true)) {
    if (!s->is_array() || s->empty()) {
      r.error("seeds", "expected a non-empty array");
    } else {
      std::set<std::uint64_t> seen;
      for (std::size_t i = 0; i < s->size(); ++i) {
        const std::string ip = "seeds[" + std::to_string(i) + "]";
        const json & e = (*s)[i];
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
          r.error(ip, "expected a non-negative 64-bit integer");
          continue;
        }
        if (!seen.insert(e.get<std::uint64_t>()).second) {
          r.error(ip, "duplicate seed");
        }
        c.seeds.push_back(e.get<std::uint64_t>());
      }
    }
  }
  r.number(doc, "frame_rate_hz", "", c.frame_rate);
  r.positive("frame_rate_hz", c.frame_rate);
  r.number(doc, "max_sim_time_s", "", c.max_sim_time);
  r.positive("max_sim_time_s", c.max_sim_time);
  if (const json * g = r.member(doc, "gaze", "", false)) {
    read_gaze(r, *g, c.gaze, base_dir);
  }
  if (const json * l = r.member(doc, "lidar", "", false)) {
    read_lidar(r, *l, c.lidar);
  }
  if (const json * a = r.member(doc, "atmosphere", "", false)) {
    read_atmosphere(r, *a, c.atmosphere);
  }
  if (const json * d = r.member(doc, "detection", "", false)) {
    if (r.object(*d, "detection", {"min_points"})) {
      r.integer(*d, "min_points", "detection", c.min_points);
      if (c.min_points < 1) {
        r.error("detection.min_points", "must be at least 1");
      }
    }
  }

  if (result.diagnostics.empty()) {
    result.config = std::move(c);
  }
  return result;
}

ConfigLoadResult read_run_config(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ConfigLoadResult result;
    result.diagnostics.push_back({"<file>", "cannot open '" + path.string() + "'"});
    return result;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str(), path.parent_path());
}

RunConfig load_run_config(const std::filesystem::path & path)
{
  auto result = read_run_config(path);
  if (!result.config) {
    std::string msg = "invalid run configuration";
    for (const auto & d : result.diagnostics) {
      msg += "\n  " + format_diagnostic(path.string(), d);
    }
    throw ValidationError(msg);
  }
  return std::move(*result.config);
}

}  // namespace gazelidar
