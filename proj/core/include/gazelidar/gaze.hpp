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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gazelidar
{

/// Visual acuity as a function of angular offset from the gaze direction.
/// Even, equal to 1 at zero offset, non-increasing in |offset|.
class AcuityFunction
{
public:
  enum class Kind { boxcar, gaussian };

  /// 1 for |offset| <= half_width, 0 outside.
  static AcuityFunction boxcar(double half_width);
  /// exp(-offset^2 / (2 sigma^2)).
  static AcuityFunction gaussian(double sigma);

  Kind kind() const noexcept { return kind_; }
  /// Boxcar half-width or gaussian sigma, radians.
  double width() const noexcept { return width_; }

  double operator()(double offset) const;

  /// Half-width of the open set {offset : V(offset) > eta}; 0 when empty.
  /// Unbounded sets are reported as π or more.
  double half_width_above(double eta) const;

private:
  AcuityFunction(Kind kind, double width) : kind_(kind), width_(width) {}

  Kind kind_;
  double width_;
};

struct GazeState
{
  double theta_g{0.0};  // radians, [0, 2π)
  double eta{0.5};      // acuity threshold, (0, 1]

  /// Normalizes theta_g and checks eta; throws DomainError.
  static GazeState make(double theta_g, double eta);
};

/// Union of disjoint half-open angular intervals on [0, 2π).
///
/// Stored in canonical form: sorted, non-empty, non-touching intervals
/// [begin, end) with 0 <= begin < end <= 2π. An arc that wraps through 0 is held
/// as two intervals, one starting at 0 and one ending at 2π.
class ArcSet
{
public:
  struct Interval
  {
    double begin;
    double end;

    double width() const { return end - begin; }
    bool operator==(const Interval &) const = default;
  };

  ArcSet() = default;

  static ArcSet full();
  /// Arc starting at `start` (any angle) sweeping counter-clockwise by `width`.
  /// Widths >= 2π give the full circle, widths <= 0 the empty set.
  static ArcSet from_arc(double start, double width);
  /// Builds from arbitrary intervals inside [0, 2π]; overlapping or touching
  /// intervals are merged. Throws DomainError for intervals outside the range.
  static ArcSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval> & intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool is_full() const noexcept;
  double total_width() const;

  /// Number of maximal arcs once the 0/2π seam is joined.
  std::size_t arc_count() const;

  bool contains(double angle) const;
  ArcSet complement() const;
  ArcSet rotated(double delta) const;
  bool subset_of(const ArcSet & other, double tolerance = 0.0) const;

  bool operator==(const ArcSet &) const = default;

private:
  std::vector<Interval> intervals_;
};

/// Driver region of focus: every direction whose acuity exceeds eta.
ArcSet compute_rof(const GazeState & gaze, const AcuityFunction & acuity);

/// LiDAR region of interest: the complement of the region of focus.
ArcSet compute_roi(const ArcSet & rof);

/// Piecewise-constant gaze direction schedule.
class GazeTrace
{
public:
  struct Entry
  {
    double t;      // seconds
    double theta;  // radians, normalized
  };

  /// Constant gaze for all time.
  static GazeTrace constant(double theta_g, double eta);

  /// CSV with header `t_s,theta_g_deg`. Throws ParseError naming the line, or
  /// ValidationError for an empty trace / non-increasing timestamps.
  static GazeTrace parse(std::istream & in, double eta, const std::string & source = "<gaze>");
  static GazeTrace load(const std::filesystem::path & path, double eta);

  /// Active entry at time t; times before the first entry clamp to it.
  GazeState at(double t) const;

  const std::vector<Entry> & entries() const noexcept { return entries_; }
  double eta() const noexcept { return eta_; }

private:
  GazeTrace(std::vector<Entry> entries, double eta) : entries_(std::move(entries)), eta_(eta) {}

  std::vector<Entry> entries_;
  double eta_;
};

}  // namespace gazelidar
