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

#include "tripscore/timeline.hpp"

#include <algorithm>
#include <cmath>

namespace tripscore
{

TimeWindow period_window(Period period)
{
  using std::chrono::hours;
  switch (period) {
    case Period::Morning:
      return {hours{8}, hours{12}};
    case Period::Afternoon:
      return {hours{12}, hours{18}};
    case Period::Evening:
      return {hours{18}, hours{23}};
  }
  return {hours{0}, hours{0}};
}

Period period_of(ClockTime t)
{
  if (t < period_window(Period::Afternoon).start) return Period::Morning;
  if (t < period_window(Period::Evening).start) return Period::Afternoon;
  return Period::Evening;
}

Resolution resolve_activity_times(const Itinerary & itinerary, const ReferenceCatalog & catalog, Date start_date)
{
  Resolution out{itinerary, {}};
  for (auto & day : out.itinerary.days) {
    const Date date = day_date(start_date, day.day_index);
    DateTime cursor{date};
    for (auto & block : day.blocks) {
      const DateTime block_start = DateTime{date} + period_window(block.period).start;
      for (auto & act : block.activities) {
        act.resolved_start.reset();
        act.resolved_end.reset();
        switch (act.kind) {
          case ActivityKind::Transportation: {
            const auto * leg = catalog.find_transport(act.id);
            if (leg == nullptr) {
              out.unknown.push_back({day.day_index, act.kind, act.id});
              break;
            }
            act.resolved_start = leg->depart;
            act.resolved_end = leg->arrive;
            cursor = std::max(cursor, leg->arrive);
            break;
          }
          case ActivityKind::Poi: {
            double hours = kDefaultVisitHours;
            if (!act.id.empty()) {
              const auto * poi = catalog.find_poi(act.id);
              if (poi == nullptr) {
                out.unknown.push_back({day.day_index, act.kind, act.id});
              } else if (poi->recommended_duration_hours) {
                hours = *poi->recommended_duration_hours;
              }
            }
            const DateTime start = std::max(block_start, cursor);
            const auto minutes = std::chrono::minutes{std::llround(hours * 60.0)};
            act.resolved_start = start;
            act.resolved_end = start + minutes;
            cursor = *act.resolved_end;
            break;
          }
          case ActivityKind::Hotel: {
            if (catalog.find_hotel(act.id) == nullptr) {
              out.unknown.push_back({day.day_index, act.kind, act.id});
            }
            const DateTime anchor = std::max(DateTime{date} + kHotelAnchor, cursor);
            act.resolved_start = anchor;
            act.resolved_end = anchor;
            cursor = anchor;
            break;
          }
        }
      }
    }
  }
  return out;
}

double poi_hours(const DayPlan & day)
{
  std::chrono::minutes total{0};
  for (const auto & block : day.blocks) {
    for (const auto & act : block.activities) {
      if (act.kind == ActivityKind::Poi && act.resolved_start && act.resolved_end) {
        total += *act.resolved_end - *act.resolved_start;
      }
    }
  }
  return static_cast<double>(total.count()) / 60.0;
}

bool is_travel_day(const DayPlan & day)
{
  for (const auto & block : day.blocks) {
    for (const auto & act : block.activities) {
      if (act.kind == ActivityKind::Transportation) return true;
    }
  }
  return false;
}

}  // namespace tripscore
