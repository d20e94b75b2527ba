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

#include "gazelidar/gaze.hpp"

#include "gazelidar/angles.hpp"
#include "gazelidar/csv.hpp"
#include "gazelidar/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

namespace gazelidar
{

AcuityFunction AcuityFunction::boxcar(double half_width)
{
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("acuity: boxcar half_width must be positive");
  }
  return {Kind::boxcar, half_width};
}

AcuityFunction AcuityFunction::gaussian(double sigma)
{
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("acuity: gaussian sigma must be positive");
  }
  return {Kind::gaussian, sigma};
}

double AcuityFunction::operator()(double offset) const
{
  const double a = std::abs(offset);
  switch (kind_) {
    case Kind::boxcar:
      return a <= width_ ? 1.0 : 0.0;
    case Kind::gaussian:
      return std::exp(-(a * a) / (2.0 * width_ * width_));
  }
  return 0.0;
}

double AcuityFunction::half_width_above(double eta) const
{
  if (eta >= 1.0) {
    return 0.0;
  }
  switch (kind_) {
    case Kind::boxcar:
      // V takes only the values 0 and 1
      return eta < 0.0 ? kPi : width_;
    case Kind::gaussian:
      if (eta <= 0.0) {
        return kPi;
      }
      return width_ * std::sqrt(2.0 * std::log(1.0 / eta));
  }
  return 0.0;
}

GazeState GazeState::make(double theta_g, double eta)
{
  if (!std::isfinite(theta_g)) {
    throw DomainError("gaze: theta_g must be finite");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw DomainError("gaze: eta must lie in (0, 1]");
  }
  return {normalize_angle(theta_g), eta};
}

ArcSet ArcSet::full()
{
  ArcSet s;
  s.intervals_.push_back({0.0, kTwoPi});
  return s;
}

ArcSet ArcSet::from_arc(double start, double width)
{
  if (!(width > 0.0)) {
    return {};
  }
  if (width >= kTwoPi) {
    return full();
  }
  const double s = normalize_angle(start);
  const double e = s + width;
  if (e <= kTwoPi) {
    return from_intervals({{s, e}});
  }
  return from_intervals({{s, kTwoPi}, {0.0, e - kTwoPi}});
}

ArcSet ArcSet::from_intervals(std::vector<Interval> intervals)
{
  for (const auto & iv : intervals) {
    if (!(iv.begin >= 0.0 && iv.begin <= iv.end && iv.end <= kTwoPi)) {
      throw DomainError("arc set: interval outside [0, 2pi] or reversed");
    }
  }
  std::erase_if(intervals, [](const Interval & iv) { return !(iv.end > iv.begin); });
  std::sort(intervals.begin(), intervals.end(), [](const Interval & a, const Interval & b) {
    return a.begin < b.begin || (a.begin == b.begin && a.end < b.end);
  });
  ArcSet s;
  for (const auto & iv : intervals) {
    if (!s.intervals_.empty() && iv.begin <= s.intervals_.back().end) {
      s.intervals_.back().end = std::max(s.intervals_.back().end, iv.end);
    } else {
      s.intervals_.push_back(iv);
    }
  }
  return s;
}

bool ArcSet::is_full() const noexcept
{
  return intervals_.size() == 1 && intervals_.front().begin == 0.0 &&
         intervals_.front().end == kTwoPi;
}

double ArcSet::total_width() const
{
  double w = 0.0;
  for (const auto & iv : intervals_) {
    w += iv.width();
  }
  return w;
}

std::size_t ArcSet::arc_count() const
{
  const std::size_t n = intervals_.size();
  if (n >= 2 && intervals_.front().begin == 0.0 && intervals_.back().end == kTwoPi) {
    return n - 1;
  }
  return n;
}

bool ArcSet::contains(double angle) const
{
  const double a = normalize_angle(angle);
  const auto it = std::upper_bound(
    intervals_.begin(), intervals_.end(), a, [](double v, const Interval & iv) { return v < iv.end; });
  return it != intervals_.end() && it->begin <= a;
}

ArcSet ArcSet::complement() const
{
  ArcSet out;
  double cursor = 0.0;
  for (const auto & iv : intervals_) {
    if (iv.begin > cursor) {
      out.intervals_.push_back({cursor, iv.begin});
    }
    cursor = iv.end;
  }
  if (cursor < kTwoPi) {
    out.intervals_.push_back({cursor, kTwoPi});
  }
  return out;
}

ArcSet ArcSet::rotated(double delta) const
{
  if (is_full() || empty()) {
    return *this;
  }
  // rotate whole arcs: a wrap arc stored as [b, 2π) + [0, e) moves as one piece
  std::vector<Interval> arcs = intervals_;
  if (arcs.size() > 1 && arcs.front().begin == 0.0 && arcs.back().end == kTwoPi) {
    arcs.back().end = kTwoPi + arcs.front().end;
    arcs.erase(arcs.begin());
  }
  std::vector<Interval> pieces;
  for (const auto & arc : arcs) {
    const ArcSet moved = from_arc(arc.begin + delta, arc.width());
    pieces.insert(pieces.end(), moved.intervals_.begin(), moved.intervals_.end());
  }
  return from_intervals(std::move(pieces));
}

bool ArcSet::subset_of(const ArcSet & other, double tolerance) const
{
  // other's intervals are also tried one turn either way so slivers at the seam match
  return std::all_of(intervals_.begin(), intervals_.end(), [&](const Interval & iv) {
    return std::any_of(other.intervals_.begin(), other.intervals_.end(), [&](const Interval & o) {
      for (const double shift : {0.0, -kTwoPi, kTwoPi}) {
        if (o.begin + shift - tolerance <= iv.begin && iv.end <= o.end + shift + tolerance) {
          return true;
        }
      }
      return false;
    });
  });
}

ArcSet compute_rof(const GazeState & gaze, const AcuityFunction & acuity)
{
  const double half = acuity.half_width_above(gaze.eta);
  if (half <= 0.0) {
    return {};
  }
  if (half >= kPi) {
    return ArcSet::full();
  }
  return ArcSet::from_arc(gaze.theta_g - half, 2.0 * half);
}

ArcSet compute_roi(const ArcSet & rof) { return rof.complement(); }

GazeTrace GazeTrace::constant(double theta_g, double eta)
{
  const GazeState g = GazeState::make(theta_g, eta);
  return GazeTrace({{0.0, g.theta_g}}, eta);
}

GazeTrace GazeTrace::parse(std::istream & in, double eta, const std::string & source)
{
  // validates eta up front
  (void)GazeState::make(0.0, eta);

  std::vector<Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    csv::strip_line_ending(line);
    if (!header_seen) {
      csv::strip_bom(line);
      if (line != "t_s,theta_g_deg") {
        throw ParseError(source, line_no, "expected header 't_s,theta_g_deg'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const auto fields = csv::split(line);
    if (fields.size() != 2) {
      throw ParseError(source, line_no, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    const auto t = csv::parse_double(fields[0]);
    const auto theta_deg = csv::parse_double(fields[1]);
    if (!t || !std::isfinite(*t)) {
      throw ParseError(source, line_no, "invalid t_s '" + std::string(fields[0]) + "'");
    }
    if (!theta_deg || !std::isfinite(*theta_deg)) {
      throw ParseError(source, line_no, "invalid theta_g_deg '" + std::string(fields[1]) + "'");
    }
    if (!entries.empty() && !(*t > entries.back().t)) {
      throw ParseError(source, line_no, "timestamps must be strictly increasing");
    }
    entries.push_back({*t, normalize_angle(deg_to_rad(*theta_deg))});
  }
  if (!header_seen) {
    throw ParseError(source, 1, "missing header");
  }
  if (entries.empty()) {
    throw ValidationError(source + ": gaze trace has no entries");
  }
  return GazeTrace(std::move(entries), eta);
}

GazeTrace GazeTrace::load(const std::filesystem::path & path, double eta)
{
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open gaze trace '" + path.string() + "'");
  }
  return parse(in, eta, path.string());
}

GazeState GazeTrace::at(double t) const
{
  auto it = std::upper_bound(
    entries_.begin(), entries_.end(), t, [](double v, const Entry & e) { return v < e.t; });
  if (it != entries_.begin()) {
    --it;
  }
  return {it->theta, eta_};
}

}  // namespace gazelidar
