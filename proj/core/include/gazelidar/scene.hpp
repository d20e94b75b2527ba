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

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace gazelidar
{

struct Vec2
{
  double x{0.0};  // meters
  double y{0.0};  // meters

  constexpr Vec2 operator+(const Vec2 & o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2 & o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2 &) const = default;

  constexpr double dot(const Vec2 & o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2 & o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }

  static Vec2 unit(double heading) { return {std::cos(heading), std::sin(heading)}; }
};

using ObstacleId = std::uint32_t;

/// Rectangular obstacle moving in a straight line at constant speed along its
/// heading. Static structures use speed 0.
struct ObstacleBox
{
  ObstacleId id{0};
  Vec2 center;
  double heading{0.0};      // radians, direction of the long axis
  double half_length{0.0};  // meters, along heading
  double half_width{0.0};   // meters, across heading
  double speed{0.0};        // m/s along heading

  /// Corners in counter-clockwise order starting at front-left.
  std::array<Vec2, 4> corners() const;
};

struct Scene
{
  Vec2 ego_position;
  std::vector<ObstacleBox> obstacles;
  Vec2 conflict_point;

  const ObstacleBox * find(ObstacleId id) const;
};

struct RayHit
{
  double range{0.0};
  ObstacleId id{0};

  bool operator==(const RayHit &) const = default;
};

/// Throws ValidationError on non-finite values, non-positive extents, negative
/// speeds or duplicate ids.
void validate(const Scene & scene);

/// Obstacle centers `t` seconds later. Ego and conflict point are
/// left untouched.
Scene advance(const Scene & scene, double t);

/// Nearest hit of the ray against any obstacle outline within `max_range`.
/// Coincident hits resolve to the smaller obstacle id. Ranges are in (0, max_range].
std::optional<RayHit> cast_ray(const Scene & scene, Vec2 origin, double angle, double max_range);

/// True iff a return attributed to `hit_id` belongs to obstacle `obstacle_id`.
constexpr bool contains_point_of(ObstacleId hit_id, ObstacleId obstacle_id)
{
  return hit_id == obstacle_id;
}

/// Scene snapshot prepared for repeated ray casts: each box is stored in its
/// own frame together with a bounding circle for early rejection.
class RayCaster
{
public:
  explicit RayCaster(const Scene & scene);

  std::optional<RayHit> cast(Vec2 origin, double angle, double max_range) const;

private:
  struct Prepared
  {
    ObstacleId id;
    Vec2 center;
    double cos_h;
    double sin_h;
    double half_length;
    double half_width;
    double radius;
  };

  std::vector<Prepared> boxes_;
};

}  // namespace gazelidar
