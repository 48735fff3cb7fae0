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

#include "tripscore/soft_scorer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <string>

#include "tripscore/geo.hpp"
#include "tripscore/text.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{
namespace
{

double fraction_left(std::size_t bad, std::size_t total)
{
  if (total == 0) return 1.0;
  return 1.0 - static_cast<double>(bad) / static_cast<double>(total);
}

std::size_t poi_count(const Itinerary & it)
{
  std::size_t n = 0;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) n += act.kind == ActivityKind::Poi;
    }
  }
  return n;
}

std::string poi_key(const Activity & act) { return act.id.empty() ? "\x1f" + normalize_name(act.name) : act.id; }

}  // namespace

double score_schedule_density(const Itinerary & resolved)
{
  std::size_t bad = 0;
  for (const auto & day : resolved.days) {
    const bool travel = is_travel_day(day);
    const double lo = travel ? kTravelDayMinHours : kFullDayMinHours;
    const double hi = travel ? kTravelDayMaxHours : kFullDayMaxHours;
    const double h = poi_hours(day);
    bad += h < lo || h > hi;
  }
  return fraction_left(bad, resolved.days.size());
}

double score_hotel_consistency(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<const Hotel *> nights;
  for (const auto & day : it.days) {
    const Activity * last = nullptr;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind == ActivityKind::Hotel) last = &act;
      }
    }
    if (last != nullptr) nights.push_back(catalog.find_hotel(last->id));
  }
  std::size_t switches = 0;
  for (std::size_t i = 1; i < nights.size(); ++i) {
    const Hotel * a = nights[i - 1];
    const Hotel * b = nights[i];
    if (a == nullptr || b == nullptr || a->id == b->id || a->city != b->city) continue;
    switches += haversine_km(a->location, b->location) <= kHotelSwitchRadiusKm;
  }
  return fraction_left(switches, nights.size());
}

double score_daytime_utilization(const Itinerary & resolved)
{
  using std::chrono::hours;
  using std::chrono::minutes;
  std::size_t bad = 0;
  for (const auto & day : resolved.days) {
    bool has_poi = false;
    std::vector<std::pair<DateTime, DateTime>> legs;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind == ActivityKind::Poi && block.period != Period::Evening) has_poi = true;
        if (act.kind == ActivityKind::Transportation && act.resolved_start && act.resolved_end) {
          legs.emplace_back(*act.resolved_start, *act.resolved_end);
        }
      }
    }
    if (has_poi) continue;
    // Union of transport time clipped to this day's 08:00-18:00.
    minutes covered{0};
    if (!legs.empty()) {
      const Date date = date_of(legs.front().first);
      const DateTime lo = DateTime{date} + hours{8};
      const DateTime hi = DateTime{date} + hours{18};
      std::sort(legs.begin(), legs.end());
      DateTime reach = lo;
      for (const auto & [s, e] : legs) {
        const DateTime a = std::max(s, reach);
        const DateTime b = std::min(e, hi);
        if (b > a) covered += b - a;
        reach = std::max(reach, std::min(e, hi));
      }
    }
    if (static_cast<double>(covered.count()) < kDaytimeTransportExemptHours * 60.0) ++bad;
  }
  return fraction_left(bad, resolved.days.size());
}

double score_unique_attractions(const Itinerary & it)
{
  std::size_t total = 0;
  std::map<std::string, std::size_t> visits;  // after merging back-to-back repeats
  for (const auto & day : it.days) {
    const Activity * prev = nullptr;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind == ActivityKind::Poi) {
          ++total;
          const bool repeat = prev != nullptr && prev->kind == ActivityKind::Poi && poi_key(*prev) == poi_key(act);
          if (!repeat) ++visits[poi_key(act)];
        }
        prev = &act;
      }
    }
  }
  if (total == 0) return 1.0;
  const double n = static_cast<double>(total);
  double dup = 0.0;
  double excess = 0.0;
  for (const auto & [key, count] : visits) {
    if (count < 2) continue;
    dup += 1.0;
    const double extra = static_cast<double>(count - 1);
    excess += extra * extra;
  }
  return std::max(0.0, 1.0 - dup / n - excess * kDuplicatePenalty / n);
}

double score_location_clustering(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<double> hops;
  for (const auto & day : it.days) {
    const Poi * prev = nullptr;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Poi || act.id.empty()) continue;
        const Poi * poi = catalog.find_poi(act.id);
        if (poi == nullptr) continue;
        if (prev != nullptr) hops.push_back(haversine_km(prev->location, poi->location));
        prev = poi;
      }
    }
  }
  if (hops.size() < kClusteringMinPairs) return 1.0;
  std::vector<double> sorted = hops;
  std::sort(sorted.begin(), sorted.end());
  // nearest rank: ceil(0.8 n), 1-based
  const std::size_t rank = (4 * sorted.size() + 4) / 5;
  const double threshold = sorted[rank - 1];
  const auto far = static_cast<std::size_t>(
    std::count_if(hops.begin(), hops.end(), [threshold](double d) { return d > threshold; }));
  return std::max(0.0, fraction_left(far, poi_count(it)));
}

double likert_to_unit(int rating) { return static_cast<double>(std::clamp(rating, 1, 5) - 1) / 4.0; }

LikertScores score_likert_subscores(std::string_view itinerary_text, JudgePort * judge)
{
  if (judge == nullptr) return {};
  auto diversity = std::async(std::launch::async, [&] { return judge->rate_diversity(itinerary_text); });
  const LikertRating iconic = judge->rate_iconic(itinerary_text);
  return {likert_to_unit(iconic.rating), likert_to_unit(diversity.get().rating), ScoreSource::Judge};
}

SoftVector score_soft_rules(const Itinerary & resolved, const ReferenceCatalog & catalog)
{
  SoftVector v;
  v.schedule = score_schedule_density(resolved);
  v.hotel = score_hotel_consistency(resolved, catalog);
  v.daytime = score_daytime_utilization(resolved);
  v.unique = score_unique_attractions(resolved);
  v.clustering = score_location_clustering(resolved, catalog);
  return v;
}

}  // namespace tripscore
