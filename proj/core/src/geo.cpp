// Copyright 2026 The tripscore Authors
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

#include "tripscore/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tripscore
{
namespace
{
constexpr double kDegToRad = std::numbers::pi / 180.0;

double hav(double angle)
{
  const double s = std::sin(0.5 * angle);
  return s * s;
}
}  // namespace

double haversine_km(const GeoPoint & p, const GeoPoint & q)
{
  const double lat_p = p.lat * kDegToRad;
  const double lat_q = q.lat * kDegToRad;
  const double h = hav(lat_q - lat_p) + std::cos(lat_p) * std::cos(lat_q) * hav((q.lon - p.lon) * kDegToRad);
  // rounding can push h a hair above 1 for antipodal points
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

}  // namespace tripscore
