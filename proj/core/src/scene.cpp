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

#include "gazelidar/scene.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/error.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace gazelidar
{

std::array<Vec2, 4> ObstacleBox::corners() const
{
  const Vec2 along = Vec2::unit(heading) * half_length;
  const Vec2 across = Vec2::unit(heading + kPi / 2.0) * half_width;
  return {
    center + along + across,
    center - along + across,
    center - along - across,
    center + along - across,
  };
}

const ObstacleBox * Scene::find(ObstacleId id) const
{
  const auto it = std::find_if(
    obstacles.begin(), obstacles.end(), [id](const ObstacleBox & b) { return b.id == id; });
  return it == obstacles.end() ? nullptr : &*it;
}

namespace
{

bool finite(const Vec2 & v) { return std::isfinite(v.x) && std::isfinite(v.y); }

}  // namespace

void validate(const Scene & scene)
{
  if (!finite(scene.ego_position) || !finite(scene.conflict_point)) {
    throw ValidationError("scene: ego_position and conflict_point must be finite");
  }
  std::unordered_set<ObstacleId> seen;
  for (const auto & box : scene.obstacles) {
    const std::string tag = "scene: obstacle " + std::to_string(box.id);
    if (!seen.insert(box.id).second) {
      throw ValidationError(tag + ": duplicate id");
    }
    if (!finite(box.center) || !std::isfinite(box.heading)) {
      throw ValidationError(tag + ": non-finite pose");
    }
    if (!(box.half_length > 0.0) || !(box.half_width > 0.0)) {
      throw ValidationError(tag + ": half extents must be positive");
    }
    if (!(box.speed >= 0.0) || !std::isfinite(box.speed)) {
      throw ValidationError(tag + ": speed must be finite and non-negative");
    }
  }
}

Scene advance(const Scene & scene, double t)
{
  if (!(t >= 0.0)) {
    throw DomainError("advance: t must be non-negative");
  }
  Scene out = scene;
  for (auto & box : out.obstacles) {
    box.center = box.center + Vec2::unit(box.heading) * (t * box.speed);
  }
  return out;
}

std::optional<RayHit> cast_ray(const Scene & scene, Vec2 origin, double angle, double max_range)
{
  return RayCaster(scene).cast(origin, angle, max_range);
}

RayCaster::RayCaster(const Scene & scene)
{
  boxes_.reserve(scene.obstacles.size());
  for (const auto & b : scene.obstacles) {
    boxes_.push_back(
      {b.id, b.center, std::cos(b.heading), std::sin(b.heading), b.half_length, b.half_width,
       std::hypot(b.half_length, b.half_width)});
  }
}

std::optional<RayHit> RayCaster::cast(Vec2 origin, double angle, double max_range) const
{
  if (!(max_range > 0.0)) {
    throw DomainError("cast_ray: max_range must be positive");
  }
  const Vec2 dir = Vec2::unit(angle);
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::optional<RayHit> best;
  for (const auto & b : boxes_) {
    const Vec2 rel = b.center - origin;
    const double along = rel.dot(dir);
    const double dist2 = rel.dot(rel);
    const double r2 = b.radius * b.radius;
    // bounding circle: behind the origin, off the ray line, or out of range
    if (along < -b.radius || dist2 - along * along > r2) {
      continue;
    }
    if (std::sqrt(dist2) - b.radius > max_range) {
      continue;
    }

    // slab test in the box frame
    const Vec2 o{-rel.x * b.cos_h - rel.y * b.sin_h, rel.x * b.sin_h - rel.y * b.cos_h};
    const Vec2 d{dir.x * b.cos_h + dir.y * b.sin_h, -dir.x * b.sin_h + dir.y * b.cos_h};

    double t_enter = -inf;
    double t_exit = inf;
    bool miss = false;
    const double extent[2] = {b.half_length, b.half_width};
    const double oc[2] = {o.x, o.y};
    const double dc[2] = {d.x, d.y};
    for (int axis = 0; axis < 2; ++axis) {
      if (dc[axis] == 0.0) {
        if (std::abs(oc[axis]) > extent[axis]) {
          miss = true;
          break;
        }
        continue;
      }
      double t1 = (-extent[axis] - oc[axis]) / dc[axis];
      double t2 = (extent[axis] - oc[axis]) / dc[axis];
      if (t1 > t2) {
        std::swap(t1, t2);
      }
      t_enter = std::max(t_enter, t1);
      t_exit = std::min(t_exit, t2);
    }
    if (miss || t_exit < t_enter) {
      continue;
    }
    // origin inside the box: the outline is crossed on the way out
    const double t = t_enter > 0.0 ? t_enter : t_exit;
    if (!(t > 0.0) || t > max_range) {
      continue;
    }
    if (!best || t < best->range || (t == best->range && b.id < best->id)) {
      best = RayHit{t, b.id};
    }
  }
  return best;
}

}  // namespace gazelidar
