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

#include <gazelidar/angles.hpp>
#include <gazelidar/error.hpp>
#include <gazelidar/gaze.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace gazelidar;

namespace
{

ArcSet random_arcset(std::mt19937_64 & rng)
{
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<ArcSet::Interval> ivs;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) {
      std::swap(a, b);
    }
    ivs.push_back({a, b});
  }
  return ArcSet::from_intervals(ivs);
}

AcuityFunction random_acuity(std::mt19937_64 & rng, bool gaussian)
{
  std::uniform_real_distribution<double> w(deg_to_rad(1.0), deg_to_rad(120.0));
  return gaussian ? AcuityFunction::gaussian(w(rng)) : AcuityFunction::boxcar(w(rng));
}

}  // namespace

TEST_CASE("boxcar region of focus around gaze 0 wraps through 0")
{
  const ArcSet rof =
    compute_rof(GazeState::make(0.0, 0.5), AcuityFunction::boxcar(deg_to_rad(30.0)));
  REQUIRE(rof.intervals().size() == 2);
  CHECK(rof.intervals()[0].begin == 0.0);
  CHECK(rad_to_deg(rof.intervals()[0].end) == doctest::Approx(30.0));
  CHECK(rad_to_deg(rof.intervals()[1].begin) == doctest::Approx(330.0));
  CHECK(rof.intervals()[1].end == kTwoPi);
  CHECK(rof.arc_count() == 1);
  CHECK(rad_to_deg(rof.total_width()) == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("threshold at the acuity peak gives an empty focus region")
{
  const GazeState g = GazeState::make(1.0, 1.0);
  CHECK(compute_rof(g, AcuityFunction::boxcar(deg_to_rad(30.0))).empty());
  CHECK(compute_rof(g, AcuityFunction::gaussian(deg_to_rad(15.0))).empty());
}

TEST_CASE("gaussian focus half-width matches bisection and the closed form")
{
  const auto v = AcuityFunction::gaussian(deg_to_rad(15.0));
  const ArcSet rof = compute_rof(GazeState::make(0.0, 0.5), v);
  const double half = 0.5 * rof.total_width();
  const double bisected = oracle::acuity_crossing(v, 0.5);
  CHECK(std::abs(half - bisected) < 1e-12);
  CHECK(rad_to_deg(half) == doctest::Approx(17.66115).epsilon(1e-6));
  CHECK(rad_to_deg(half) == doctest::Approx(15.0 * std::sqrt(2.0 * std::log(2.0))).epsilon(1e-12));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> eta(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_acuity(rng, true);
    const double e = eta(rng);
    if (f.half_width_above(e) < kPi) {
      CHECK(std::abs(f.half_width_above(e) - oracle::acuity_crossing(f, e)) < 1e-9);
    }
  }
}

TEST_CASE("region of interest is the complement")
{
  const ArcSet rof =
    compute_rof(GazeState::make(0.0, 0.5), AcuityFunction::boxcar(deg_to_rad(30.0)));
  const ArcSet roi = compute_roi(rof);
  REQUIRE(roi.intervals().size() == 1);
  CHECK(rad_to_deg(roi.intervals()[0].begin) == doctest::Approx(30.0));
  CHECK(rad_to_deg(roi.intervals()[0].end) == doctest::Approx(330.0));
  CHECK(rad_to_deg(roi.total_width()) == doctest::Approx(300.0).epsilon(1e-12));

  CHECK(compute_roi(ArcSet{}).is_full());
  CHECK(compute_roi(ArcSet::full()).empty());
}

TEST_CASE("complement is an involution on random arc sets")
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const ArcSet s = random_arcset(rng);
    CHECK(s.complement().complement() == s);
  }
}

TEST_CASE("focus and interest partition the circle")
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(-10.0, 10.0);
  std::uniform_real_distribution<double> eta(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto v = random_acuity(rng, i % 2 == 1);
    const GazeState g = GazeState::make(theta(rng), eta(rng));
    const ArcSet rof = compute_rof(g, v);
    const ArcSet roi = compute_roi(rof);
    CHECK(std::abs(rof.total_width() + roi.total_width() - kTwoPi) < 1e-12);
    for (int k = 0; k < 720; ++k) {
      const double a = deg_to_rad(0.5 * k + 0.123);
      CHECK(rof.contains(a) != roi.contains(a));
    }
  }
}

TEST_CASE("focus region is shift-equivariant in the gaze direction")
{
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int i = 0; i < 500; ++i) {
    const auto v = random_acuity(rng, i % 2 == 0);
    const double theta = u(rng);
    const double delta = u(rng) - kPi;
    const ArcSet shifted = compute_rof(GazeState::make(theta + delta, 0.5), v);
    const ArcSet rotated = compute_rof(GazeState::make(theta, 0.5), v).rotated(delta);
    CHECK(std::abs(shifted.total_width() - rotated.total_width()) < 1e-9);
    CHECK(shifted.subset_of(rotated, 1e-9));
    CHECK(rotated.subset_of(shifted, 1e-9));
  }
}

TEST_CASE("raising the threshold shrinks the focus region")
{
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::uniform_real_distribution<double> eta(0.01, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto v = random_acuity(rng, i % 2 == 0);
    const double theta = u(rng);
    double e1 = eta(rng);
    double e2 = eta(rng);
    if (e1 > e2) {
      std::swap(e1, e2);
    }
    const ArcSet wide = compute_rof(GazeState::make(theta, e1), v);
    const ArcSet narrow = compute_rof(GazeState::make(theta, e2), v);
    CHECK(narrow.subset_of(wide));
  }
}

TEST_CASE("arc set construction and queries")
{
  const ArcSet a = ArcSet::from_intervals({{1.0, 2.0}, {1.5, 3.0}, {3.0, 3.5}, {5.0, 5.0}});
  REQUIRE(a.intervals().size() == 1);
  CHECK(a.intervals()[0] == ArcSet::Interval{1.0, 3.5});
  CHECK(a.contains(1.0));
  CHECK_FALSE(a.contains(3.5));
  CHECK(a.contains(1.0 + kTwoPi));
  CHECK_THROWS_AS(ArcSet::from_intervals({{-0.1, 1.0}}), DomainError);
  CHECK(ArcSet::from_arc(0.0, 7.0).is_full());
  CHECK(ArcSet::from_arc(0.0, 0.0).empty());
  CHECK(ArcSet::full().arc_count() == 1);
}

TEST_CASE("gaze state validation")
{
  CHECK(GazeState::make(-kPi / 2.0, 0.5).theta_g == doctest::Approx(3.0 * kPi / 2.0));
  CHECK_THROWS_AS(GazeState::make(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(GazeState::make(0.0, 1.5), DomainError);
  CHECK_THROWS_AS(AcuityFunction::boxcar(0.0), DomainError);
  CHECK_THROWS_AS(AcuityFunction::gaussian(-1.0), DomainError);
}

TEST_CASE("gaze trace replay is piecewise constant")
{
  SUBCASE("single entry applies at every time")
  {
    std::istringstream in("t_s,theta_g_deg\n0,90\n");
    const GazeTrace trace = GazeTrace::parse(in, 0.5);
    for (double t : {-1.0, 0.0, 3.7, 1e6}) {
      CHECK(rad_to_deg(trace.at(t).theta_g) == doctest::Approx(90.0));
    }
  }
  SUBCASE("queries before the first sample clamp to it")
  {
    std::istringstream in("t_s,theta_g_deg\n2.0,45\n4.0,135\n");
    const GazeTrace trace = GazeTrace::parse(in, 0.5);
    CHECK(rad_to_deg(trace.at(0.0).theta_g) == doctest::Approx(45.0));
  }
  SUBCASE("between samples the earlier one holds")
  {
    std::istringstream in("t_s,theta_g_deg\n0.0,10\n1.0,-20\n");
    const GazeTrace trace = GazeTrace::parse(in, 0.5);
    CHECK(rad_to_deg(trace.at(0.999).theta_g) == doctest::Approx(10.0));
    CHECK(rad_to_deg(trace.at(1.0).theta_g) == doctest::Approx(340.0));
    CHECK(trace.at(0.5).eta == 0.5);
  }
}

TEST_CASE("gaze trace errors name the offending line")
{
  auto parse = [](const std::string & text) {
    std::istringstream in(text);
    return GazeTrace::parse(in, 0.5, "trace.csv");
  };
  try {
    parse("t_s,theta_g_deg\n0,10\n1,abc\n");
    FAIL("expected ParseError");
  } catch (const ParseError & e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("trace.csv:3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("time,theta\n0,1\n"), ParseError);
  CHECK_THROWS_AS(parse("t_s,theta_g_deg\n0,1,2\n"), ParseError);
  CHECK_THROWS_AS(parse("t_s,theta_g_deg\n1,0\n1,5\n"), ParseError);
  CHECK_THROWS_AS(parse("t_s,theta_g_deg\n"), ValidationError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_NOTHROW(parse("t_s,theta_g_deg\r\n0,1\r\n"));
  CHECK_THROWS_AS(GazeTrace::load("/nonexistent/trace.csv", 0.5), Error);
}
