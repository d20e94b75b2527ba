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

#include "gazelidar/angles.hpp"

#include <cmath>

namespace gazelidar
{

double normalize_angle(double angle)
{
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) {
    a += kTwoPi;
  }
  // fmod of a tiny negative value plus 2π can round up to exactly 2π
  if (a >= kTwoPi) {
    a = 0.0;
  }
  return a;
}

double wrap_to_pi(double angle)
{
  double a = normalize_angle(angle);
  if (a > kPi) {
    a -= kTwoPi;
  }
  return a;
}

}  // namespace gazelidar
