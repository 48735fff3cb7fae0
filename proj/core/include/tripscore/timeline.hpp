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

#ifndef TRIPSCORE__TIMELINE_HPP_
#define TRIPSCORE__TIMELINE_HPP_

#include <string>
#include <vector>

#include "tripscore/model.hpp"

namespace tripscore
{

/// Half-open clock interval [start, end).
struct TimeWindow
{
  ClockTime start;
  ClockTime end;
  bool contains(ClockTime t) const { return t >= start && t < end; }
  friend bool operator==(const TimeWindow &, const TimeWindow &) = default;
};

inline constexpr double kDefaultVisitHours = 2.0;
// Hotel nights are pinned to this clock time (or later, if the day runs late).
inline constexpr ClockTime kHotelAnchor{23 * 60};

/// Morning [08:00,12:00), Afternoon [12:00,18:00), Evening [18:00,23:00).
TimeWindow period_window(Period period);

/// Period a departure at clock time `t` belongs to. Times before 08:00 count
/// as Morning and times from 23:00 on count as Evening.
Period period_of(ClockTime t);

/// Calendar date of 1-based `day_index` for a trip starting on `start`.
inline Date day_date(Date start, int day_index) { return start + std::chrono::days{day_index - 1}; }

struct UnknownEntity
{
  int day_index = 0;
  ActivityKind kind = ActivityKind::Poi;
  std::string id;
  friend bool operator==(const UnknownEntity &, const UnknownEntity &) = default;
};

struct Resolution
{
  Itinerary itinerary;                 // copy with resolved_start / resolved_end filled
  std::vector<UnknownEntity> unknown;  // non-empty ids missing from the catalog
};

/// Assigns local start/end times to every activity.
///
/// Transports copy the catalog departure and arrival. POIs start at the later
/// of their period start and the day cursor and last recommendedDurationHours
/// (2 h when absent). Hotels are zero-length stays anchored at 23:00 or the
/// cursor, whichever is later. The per-day cursor only moves forward.
/// Activities whose id is unknown keep empty times (transports) or fall back
/// to defaults (POIs, hotels) and are listed in `unknown`.
Resolution resolve_activity_times(const Itinerary & itinerary, const ReferenceCatalog & catalog, Date start_date);

/// Hours spent at POIs on one resolved day (transport and hotel excluded).
double poi_hours(const DayPlan & day);

/// True when the day contains at least one transport activity.
bool is_travel_day(const DayPlan & day);

}  // namespace tripscore

#endif  // TRIPSCORE__TIMELINE_HPP_
