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

#include "oracles.hpp"
#include "test_support.hpp"

#include <gazelidar/angles.hpp>
#include <gazelidar/error.hpp>
#include <gazelidar/runner.hpp>
#include <gazelidar/scene.hpp>

#include <doctest.h>

#include <random>

using namespace gazelidar;

namespace
{

ObstacleBox box(ObstacleId id, Vec2 c, double heading, double hl, double hw, double speed = 0.0)
{
  ObstacleBox b;
  b.id = id;
  b.center = c;
  b.heading = heading;
  b.half_length = hl;
  b.half_width = hw;
  b.speed = speed;
  return b;
}

constexpr double kSpeed50 = 50.0 / 3.6;

}  // namespace

TEST_CASE("advance moves obstacles linearly from their spawn")
{
  Scene s;
  s.conflict_point = {0.0, 10.0};
  s.obstacles.push_back(box(1, {0.0, 0.0}, 0.0, 2.25, 1.0, kSpeed50));

  const Scene one = advance(s, 1.0);
  CHECK(one.obstacles[0].center.x == doctest::Approx(13.8889).epsilon(1e-5));
  CHECK(one.obstacles[0].center.y == 0.0);
  CHECK(one.ego_position == s.ego_position);
  CHECK(one.conflict_point == s.conflict_point);

  CHECK(advance(s, 0.0).obstacles[0].center == s.obstacles[0].center);

  const Scene five = advance(s, 5.0);
  const Vec2 stepped = oracle::step_motion({0.0, 0.0}, 0.0, kSpeed50, 1.0 / 20.0, 100);
  CHECK(five.obstacles[0].center.x == doctest::Approx(69.444).epsilon(1e-5));
  CHECK(std::abs(five.obstacles[0].center.x - stepped.x) < 1e-9);

  CHECK_THROWS_AS(advance(s, -0.1), DomainError);
}

TEST_CASE("advance composes additively")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t(0.0, 10.0);
  std::uniform_real_distribution<double> h(0.0, kTwoPi);
  for (int trial = 0; trial < 200; ++trial) {
    Scene s;
    s.obstacles.push_back(box(1, {t(rng), -t(rng)}, h(rng), 2.0, 1.0, t(rng)));
    const double a = t(rng);
    const double b = t(rng);
    const Vec2 twice = advance(advance(s, a), b).obstacles[0].center;
    const Vec2 once = advance(s, a + b).obstacles[0].center;
    CHECK((twice - once).norm() < 1e-12);
  }
}

TEST_CASE("cast_ray hits a perpendicular face and respects max_range")
{
  Scene s;
  // face at x = 50 m
  s.obstacles.push_back(box(4, {52.25, 0.0}, 0.0, 2.25, 1.0));
  const auto hit = cast_ray(s, {0.0, 0.0}, 0.0, 100.0);
  REQUIRE(hit);
  CHECK(hit->range == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(hit->id == 4);
  CHECK_FALSE(cast_ray(s, {0.0, 0.0}, 0.0, 49.9));
  CHECK_FALSE(cast_ray(s, {0.0, 0.0}, kPi, 100.0));
  CHECK_THROWS_AS(cast_ray(s, {0.0, 0.0}, 0.0, 0.0), DomainError);
}

TEST_CASE("cast_ray from inside a box returns the exit edge")
{
  Scene s;
  s.obstacles.push_back(box(1, {0.0, 0.0}, 0.0, 3.0, 2.0));
  const auto hit = cast_ray(s, {0.0, 0.0}, kPi / 2.0, 10.0);
  REQUIRE(hit);
  CHECK(hit->range == doctest::Approx(2.0));
}

TEST_CASE("coincident hits resolve to the smaller id")
{
  Scene s;
  s.obstacles.push_back(box(7, {20.0, 0.0}, 0.0, 2.0, 1.0));
  s.obstacles.push_back(box(3, {20.0, 0.0}, 0.0, 2.0, 1.0));
  s.obstacles.push_back(box(5, {20.0, 0.0}, 0.0, 2.0, 1.0));
  const auto hit = cast_ray(s, {0.0, 0.0}, 0.0, 100.0);
  REQUIRE(hit);
  CHECK(hit->id == 3);
}

TEST_CASE("cast_ray matches the brute-force segment oracle on random scenes")
{
  std::mt19937_64 rng(2024);
  for (int scene_i = 0; scene_i < 10; ++scene_i) {
    const Scene s = test::random_scene(rng, 10);
    const RayCaster caster(s);
    for (int k = 0; k < 3600; ++k) {
      const double a = deg_to_rad(0.1 * k);
      const auto fast = caster.cast({0.0, 0.0}, a, 100.0);
      const auto slow = oracle::brute_force_cast(s, {0.0, 0.0}, a, 100.0);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(fast->id == slow->id);
        CHECK(std::abs(fast->range - slow->range) < 1e-9);
      }
    }
  }
}

TEST_CASE("cast_ray range is in (0, max_range] and monotone in max_range")
{
  std::mt19937_64 rng(99);
  for (int scene_i = 0; scene_i < 20; ++scene_i) {
    const Scene s = test::random_scene(rng, 20);
    for (int deg = 0; deg < 360; ++deg) {
      const double a = deg_to_rad(deg);
      const auto short_hit = cast_ray(s, {0.0, 0.0}, a, 40.0);
      const auto long_hit = cast_ray(s, {0.0, 0.0}, a, 120.0);
      if (short_hit) {
        CHECK(short_hit->range > 0.0);
        CHECK(short_hit->range <= 40.0);
        REQUIRE(long_hit);
        CHECK(*long_hit == *short_hit);
      }
    }
  }
}

TEST_CASE("contains_point_of compares identifiers")
{
  CHECK(contains_point_of(2, 2));
  CHECK_FALSE(contains_point_of(2, 3));
}

TEST_CASE("returns attributed to the right vehicle really are nearest-hits on it")
{
  const RunConfig cfg = test::sweep_config();
  const ObstacleId target = cfg.scenario.right_vehicle_id;
  const Scene initial = build_scene(cfg.scenario, 0);
  for (double t = 0.0; t < 8.0; t += 0.5) {
    const Scene s = advance(initial, t);
    const RayCaster caster(s);
    for (int k = 0; k < 3600; ++k) {
      const double a = deg_to_rad(0.1 * k);
      const auto hit = caster.cast(s.ego_position, a, 100.0);
      if (hit && contains_point_of(hit->id, target)) {
        const auto check = oracle::brute_force_cast(s, s.ego_position, a, 100.0);
        REQUIRE(check);
        CHECK(check->id == target);
      }
    }
  }
}

TEST_CASE("validate rejects malformed scenes")
{
  Scene s;
  s.obstacles.push_back(box(1, {0.0, 0.0}, 0.0, 1.0, 1.0));
  CHECK_NOTHROW(validate(s));

  Scene dup = s;
  dup.obstacles.push_back(box(1, {5.0, 0.0}, 0.0, 1.0, 1.0));
  CHECK_THROWS_AS(validate(dup), ValidationError);

  Scene flat = s;
  flat.obstacles[0].half_width = 0.0;
  CHECK_THROWS_AS(validate(flat), ValidationError);

  Scene backwards = s;
  backwards.obstacles[0].speed = -1.0;
  CHECK_THROWS_AS(validate(backwards), ValidationError);
}
