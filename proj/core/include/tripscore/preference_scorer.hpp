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

#ifndef TRIPSCORE__PREFERENCE_SCORER_HPP_
#define TRIPSCORE__PREFERENCE_SCORER_HPP_

#include <string_view>
#include <utility>

#include "tripscore/judge.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

// Pacing falls linearly to zero this many hours outside the band.
inline constexpr double kPacingFalloffHours = 4.0;

struct HourBand
{
  double lo;
  double hi;
};

/// Star band per budget: costEffective 0-2, comfortable 3-4, highEnd 5.
std::pair<int, int> star_band(Budget budget);
/// Daily POI hours per pacing: relaxed <= 6, moderate 5-9, compact >= 8.
HourBand pacing_band(Pacing pacing);
/// Exertion contribution of one POI visit.
int exertion_of(EffortClass effort);

/// Share of hotel nights whose stars fit the budget band. Absent budget or
/// no nights: 1.
double score_budget(const Itinerary & itinerary, const ReferenceCatalog & catalog, const PreferenceProfile & pref);

/// Mean day compliance with the pacing band. Absent pacing: 1.
double score_pacing(const Itinerary & resolved, const PreferenceProfile & pref);

/// Share of POI visits tagged with a preferred tag. Absent/empty tags or no
/// POIs: 1.
double score_attraction(const Itinerary & itinerary, const ReferenceCatalog & catalog, const PreferenceProfile & pref);

/// Per-day effort labels (light/moderate/strenuous), in day order.
std::vector<EffortLevel> effort_labels(const Itinerary & itinerary, const ReferenceCatalog & catalog);

/// Share of days whose effort label equals the preference. Absent: 1.
double score_effort(const Itinerary & itinerary, const ReferenceCatalog & catalog, const PreferenceProfile & pref);

/// 0.2 * final_score from the judge; `judge == nullptr` gives 0.5 tagged
/// as a rule-only default.
std::pair<double, ScoreSource> score_user_request(std::string_view itinerary_text, std::string_view request_text,
                                                  JudgePort * judge);

/// Synthetic arm only; real-world queries keep the user-request default
/// until a judge fills it in.
PrefVector score_preference_rules(const Itinerary & resolved, const Query & query, const ReferenceCatalog & catalog);

}  // namespace tripscore

#endif  // TRIPSCORE__PREFERENCE_SCORER_HPP_
