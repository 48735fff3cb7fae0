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

#ifndef TRIPSCORE__SOFT_SCORER_HPP_
#define TRIPSCORE__SOFT_SCORER_HPP_

#include <string_view>

#include "tripscore/judge.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

// Daily POI-hour bounds for schedule density.
inline constexpr double kFullDayMinHours = 4.0;
inline constexpr double kFullDayMaxHours = 10.0;
inline constexpr double kTravelDayMinHours = 2.0;
inline constexpr double kTravelDayMaxHours = 10.0;

inline constexpr double kHotelSwitchRadiusKm = 100.0;
// Transport covering at least this much of 08:00-18:00 exempts a day from
// the daytime-utilization rule.
inline constexpr double kDaytimeTransportExemptHours = 6.0;
inline constexpr double kDuplicatePenalty = 0.05;
inline constexpr std::size_t kClusteringMinPairs = 5;

inline constexpr double kJudgeDefault = 0.5;

/// 1 - (days outside their hour band) / D.
double score_schedule_density(const Itinerary & resolved);

/// 1 - switches / nights. A switch is a night in a different hotel than the
/// previous night, in the same city, at most 100 km away.
double score_hotel_consistency(const Itinerary & itinerary, const ReferenceCatalog & catalog);

/// 1 - (days with no POI in both Morning and Afternoon) / D, ignoring days
/// that transport occupies for 6 or more daytime hours.
double score_daytime_utilization(const Itinerary & resolved);

/// Penalizes attractions repeated non-consecutively.
double score_unique_attractions(const Itinerary & itinerary);

/// 1 - (consecutive POI hops strictly above the 80th percentile distance) /
/// POI count; 1 with fewer than five hops.
double score_location_clustering(const Itinerary & itinerary, const ReferenceCatalog & catalog);

/// (rating - 1) / 4.
double likert_to_unit(int rating);

struct LikertScores
{
  double iconic = kJudgeDefault;
  double diversity = kJudgeDefault;
  ScoreSource source = ScoreSource::RuleOnlyDefault;
};

/// Judge-backed iconic/diversity scores; `judge == nullptr` yields the
/// rule-only defaults. The two calls run concurrently.
LikertScores score_likert_subscores(std::string_view itinerary_text, JudgePort * judge);

/// The five rule components; iconic and diversity keep their defaults.
SoftVector score_soft_rules(const Itinerary & resolved, const ReferenceCatalog & catalog);

}  // namespace tripscore

#endif  // TRIPSCORE__SOFT_SCORER_HPP_
