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

#include "tripscore/preference_scorer.hpp"

#include <algorithm>

#include "tripscore/soft_scorer.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{

std::pair<int, int> star_band(Budget budget)
{
  switch (budget) {
    case Budget::CostEffective:
      return {0, 2};
    case Budget::Comfortable:
      return {3, 4};
    case Budget::HighEnd:
      return {5, 5};
  }
  return {0, 5};
}

HourBand pacing_band(Pacing pacing)
{
  switch (pacing) {
    case Pacing::Relaxed:
      return {0.0, 6.0};
    case Pacing::Moderate:
      return {5.0, 9.0};
    case Pacing::Compact:
      return {8.0, 24.0};
  }
  return {0.0, 24.0};
}

int exertion_of(EffortClass effort)
{
  switch (effort) {
    case EffortClass::Hiking:
    case EffortClass::ThemePark:
    case EffortClass::MountainClimbing:
      return 1;
    case EffortClass::Cycling:
      return 2;
    case EffortClass::Other:
      return 0;
  }
  return 0;
}

double score_budget(const Itinerary & it, const ReferenceCatalog & catalog, const PreferenceProfile & pref)
{
  if (!pref.budget) return 1.0;
  const auto [lo, hi] = star_band(*pref.budget);
  std::size_t nights = 0;
  std::size_t fit = 0;
  for (const auto & day : it.days) {
    const Hotel * hotel = nullptr;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Hotel) continue;
        if (const auto * h = catalog.find_hotel(act.id)) hotel = h;
      }
    }
    if (hotel == nullptr) continue;
    ++nights;
    fit += hotel->stars >= lo && hotel->stars <= hi;
  }
  return nights == 0 ? 1.0 : static_cast<double>(fit) / static_cast<double>(nights);
}

double score_pacing(const Itinerary & resolved, const PreferenceProfile & pref)
{
  if (!pref.pacing || resolved.days.empty()) return 1.0;
  const HourBand band = pacing_band(*pref.pacing);
  double sum = 0.0;
  for (const auto & day : resolved.days) {
    const double h = poi_hours(day);
    const double dist = h < band.lo ? band.lo - h : (h > band.hi ? h - band.hi : 0.0);
    sum += std::max(0.0, 1.0 - dist / kPacingFalloffHours);
  }
  return sum / static_cast<double>(resolved.days.size());
}

double score_attraction(const Itinerary & it, const ReferenceCatalog & catalog, const PreferenceProfile & pref)
{
  if (!pref.attraction_tags || pref.attraction_tags->empty()) return 1.0;
  std::size_t total = 0;
  std::size_t hits = 0;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Poi) continue;
        ++total;
        const Poi * poi = act.id.empty() ? nullptr : catalog.find_poi(act.id);
        if (poi == nullptr) continue;
        hits += std::any_of(poi->tags.begin(), poi->tags.end(),
                            [&](const std::string & t) { return pref.attraction_tags->count(t) > 0; });
      }
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(total);
}

std::vector<EffortLevel> effort_labels(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<int> exertion;
  for (const auto & day : it.days) {
    int e = 0;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Poi || act.id.empty()) continue;
        if (const auto * poi = catalog.find_poi(act.id)) e += exertion_of(poi->effort);
      }
    }
    exertion.push_back(e);
  }
  std::vector<EffortLevel> labels;
  for (std::size_t d = 0; d < exertion.size(); ++d) {
    const int prev = d > 0 ? exertion[d - 1] : 0;
    const int next = d + 1 < exertion.size() ? exertion[d + 1] : 0;
    if (exertion[d] > 2 || (exertion[d] > 0 && prev > 0)) {
      labels.push_back(EffortLevel::Strenuous);
    } else if (exertion[d] == 0 && prev == 0 && next == 0) {
      labels.push_back(EffortLevel::Light);
    } else {
      labels.push_back(EffortLevel::Moderate);
    }
  }
  return labels;
}

double score_effort(const Itinerary & it, const ReferenceCatalog & catalog, const PreferenceProfile & pref)
{
  if (!pref.effort || it.days.empty()) return 1.0;
  const auto labels = effort_labels(it, catalog);
  const auto hits = std::count(labels.begin(), labels.end(), *pref.effort);
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

std::pair<double, ScoreSource> score_user_request(std::string_view itinerary_text, std::string_view request_text,
                                                  JudgePort * judge)
{
  if (judge == nullptr) return {kJudgeDefault, ScoreSource::RuleOnlyDefault};
  const RequestRating r = judge->rate_user_request(request_text, itinerary_text);
  return {static_cast<double>(std::clamp(r.final_score, 0, 5)) / 5.0, ScoreSource::Judge};
}

PrefVector score_preference_rules(const Itinerary & resolved, const Query & query, const ReferenceCatalog & catalog)
{
  PrefVector v;
  v.split = query.split;
  if (query.split != Split::Synthetic) return v;
  const auto & p = query.preferences;
  v.synthetic = {score_budget(resolved, catalog, p), score_pacing(resolved, p), score_attraction(resolved, catalog, p),
                 score_effort(resolved, catalog, p)};
  v.applicable = {p.budget.has_value(), p.pacing.has_value(), p.attraction_tags && !p.attraction_tags->empty(),
                  p.effort.has_value()};
  return v;
}

}  // namespace tripscore
