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

#ifndef TRIPSCORE__GEO_HPP_
#define TRIPSCORE__GEO_HPP_

#include "tripscore/model.hpp"

namespace tripscore
{

// IUGG mean earth radius.
inline constexpr double kEarthRadiusKm = 6371.0088;

/// Great-circle distance in kilometres between two valid coordinates.
double haversine_km(const GeoPoint & p, const GeoPoint & q);

}  // namespace tripscore

#endif  // TRIPSCORE__GEO_HPP_
