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

#include "tripscore/commonsense_checker.hpp"

#include <algorithm>
#include <string>

#include "tripscore/errors.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{
namespace
{

struct LegRef
{
  int day_index;
  const TransportLeg * leg;
};

// Catalog-known legs in plan order. Unknown ids are the format gate's job.
std::vector<LegRef> ordered_legs(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<LegRef> legs;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Transportation) continue;
        if (const auto * leg = catalog.find_transport(act.id)) legs.push_back({day.day_index, leg});
      }
    }
  }
  return legs;
}

bool leaves_origin(const Query & q)
{
  return std::any_of(q.destinations.begin(), q.destinations.end(),
                     [&](const std::string & c) { return c != q.origin_city; });
}

bool overlaps(DateTime a0, DateTime a1, DateTime b0, DateTime b1) { return a0 < b1 && b0 < a1; }

std::string span(DateTime a, DateTime b) { return format_clock(clock_of(a)) + "-" + format_clock(clock_of(b)); }

}  // namespace

std::vector<Violation> check_completeness(const Itinerary & it, const Query & query, const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  for (std::size_t d = 0; d + 1 < it.days.size(); ++d) {
    const auto & day = it.days[d];
    bool has_hotel = false;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) has_hotel = has_hotel || act.kind == ActivityKind::Hotel;
    }
    if (!has_hotel) {
      out.push_back({ConstraintId::InformationCompleteness, day.day_index, "no hotel for the night"});
    }
  }
  if (leaves_origin(query)) {
    const auto legs = ordered_legs(it, catalog);
    const std::string & first = query.destinations.front();
    const bool outbound = std::any_of(legs.begin(), legs.end(), [&](const LegRef & l) {
      return l.leg->destination_city == first;
    });
    const bool inbound = std::any_of(legs.begin(), legs.end(), [&](const LegRef & l) {
      return l.leg->destination_city == query.origin_city;
    });
    if (!outbound) {
      out.push_back({ConstraintId::InformationCompleteness, std::nullopt, "no outbound transport to " + first});
    }
    if (!inbound) {
      out.push_back(
        {ConstraintId::InformationCompleteness, std::nullopt, "no return transport to " + query.origin_city});
    }
  }
  return out;
}

std::vector<Violation> check_chronology(const Itinerary & resolved, Date start_date)
{
  std::vector<Violation> out;
  for (const auto & day : resolved.days) {
    const Date date = day_date(start_date, day.day_index);
    std::optional<DateTime> previous;
    std::string previous_name;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (!act.resolved_start) continue;
        const DateTime start = *act.resolved_start;
        if (previous && start < *previous) {
          out.push_back({ConstraintId::ChronologicalOrder, day.day_index,
                         act.name + " at " + format_clock(clock_of(start)) + " is listed after " + previous_name +
                           " at " + format_clock(clock_of(*previous))});
        }
        if (act.kind == ActivityKind::Transportation) {
          if (date_of(start) != date) {
            out.push_back({ConstraintId::ChronologicalOrder, day.day_index,
                           act.name + " departs on " + format_date(date_of(start)) + ", not on " + format_date(date)});
          } else if (period_of(clock_of(start)) != block.period) {
            out.push_back({ConstraintId::ChronologicalOrder, day.day_index,
                           act.name + " departs at " + format_clock(clock_of(start)) + " but sits in the " +
                             std::string(to_string(block.period)) + " block"});
          }
        }
        if (!previous || start > *previous) {
          previous = start;
          previous_name = act.name;
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_location_consistency(const Itinerary & it, const Query & query,
                                                  const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  std::string city = query.origin_city;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        const std::string * where = nullptr;
        switch (act.kind) {
          case ActivityKind::Transportation:
            if (const auto * leg = catalog.find_transport(act.id)) {
              if (leg->origin_city == city) {
                city = leg->destination_city;
              } else {
                out.push_back({ConstraintId::LocationConsistency, day.day_index,
                               act.name + " leaves " + leg->origin_city + " while the traveller is in " + city});
              }
            }
            continue;
          case ActivityKind::Poi:
            if (const auto * poi = act.id.empty() ? nullptr : catalog.find_poi(act.id)) where = &poi->city;
            break;
          case ActivityKind::Hotel:
            if (const auto * hotel = catalog.find_hotel(act.id)) where = &hotel->city;
            break;
        }
        if (where != nullptr && *where != city) {
          out.push_back({ConstraintId::LocationConsistency, day.day_index,
                         act.name + " is in " + *where + " while the traveller is in " + city});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_operating_hours(const Itinerary & resolved, const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  for (const auto & day : resolved.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind != ActivityKind::Poi || act.id.empty() || !act.resolved_start || !act.resolved_end) continue;
        const auto * poi = catalog.find_poi(act.id);
        if (poi == nullptr || !poi->open_calendar) continue;
        const DateTime s = *act.resolved_start;
        const DateTime e = *act.resolved_end;
        const Date date = date_of(s);
        const bool fits = std::any_of(poi->open_calendar->begin(), poi->open_calendar->end(), [&](const OpenWindow & w) {
          return w.from <= date && date <= w.to && DateTime{date} + w.open <= s && e <= DateTime{date} + w.close;
        });
        if (!fits) {
          out.push_back({ConstraintId::OperatingHours, day.day_index,
                         act.name + " visited " + span(s, e) + " on " + format_date(date) + " outside its opening hours"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_travel_blockout(const Itinerary & resolved)
{
  std::vector<Violation> out;
  for (const auto & day : resolved.days) {
    std::vector<const Activity *> legs;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind == ActivityKind::Transportation && act.resolved_start && act.resolved_end) legs.push_back(&act);
      }
    }
    if (legs.empty()) continue;
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.kind == ActivityKind::Transportation || !act.resolved_start || !act.resolved_end) continue;
        for (const Activity * leg : legs) {
          if (overlaps(*act.resolved_start, *act.resolved_end, *leg->resolved_start, *leg->resolved_end)) {
            out.push_back({ConstraintId::TravelBlockOut, day.day_index,
                           act.name + " " + span(*act.resolved_start, *act.resolved_end) + " overlaps " + leg->name +
                             " " + span(*leg->resolved_start, *leg->resolved_end)});
            break;
          }
          if (clock_of(*leg->resolved_start) < kEarlyDepartureCutoff && *act.resolved_start < *leg->resolved_start) {
            out.push_back({ConstraintId::TravelBlockOut, day.day_index,
                           act.name + " is scheduled before the early departure of " + leg->name + " at " +
                             format_clock(clock_of(*leg->resolved_start))});
            break;
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_transport_consistency(const Itinerary & it, const Query & query,
                                                   const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  const auto legs = ordered_legs(it, catalog);
  const auto & dest = query.destinations;
  const auto find_in = [&](std::size_t lo, std::size_t hi, const std::string & c) {
    for (std::size_t i = lo; i < hi && i < dest.size(); ++i) {
      if (dest[i] == c) return true;
    }
    return false;
  };
  std::size_t next = 0;  // index of the next destination to reach
  bool home = false;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const TransportLeg & leg = *legs[k].leg;
    const int day = legs[k].day_index;
    if (k > 0 && legs[k - 1].leg->destination_city != leg.origin_city) {
      out.push_back({ConstraintId::TransportConsistency, day,
                     leg.number + " departs " + leg.origin_city + " but the previous leg ended in " +
                       legs[k - 1].leg->destination_city});
    }
    if (home) {
      out.push_back({ConstraintId::TransportConsistency, day, leg.number + " travels after the trip returned home"});
      continue;
    }
    const std::string & c = leg.destination_city;
    if (c == leg.origin_city) continue;
    if (next < dest.size() && dest[next] == c) {
      ++next;
    } else if (find_in(0, next, c)) {
      out.push_back({ConstraintId::TransportConsistency, day, leg.number + " revisits " + c});
    } else if (find_in(next + 1, dest.size(), c)) {
      out.push_back(
        {ConstraintId::TransportConsistency, day, leg.number + " reaches " + c + " before " + dest[next]});
      while (dest[next] != c) ++next;
      ++next;
    } else if (c == query.origin_city) {
      home = true;
      if (next < dest.size()) {
        out.push_back({ConstraintId::TransportConsistency, day,
                       leg.number + " returns home before visiting " + dest[next]});
      }
    }
    // any other city is a transit stop
  }
  return out;
}

std::pair<int, CommonsenseReport> evaluate_commonsense(const FormatReport & format, const Itinerary & it,
                                                       const Query & query, const ReferenceCatalog & catalog)
{
  if (!format.passed) throw PreconditionError("commonsense checks require a plan that passed the format checks");
  const Itinerary resolved = resolve_activity_times(it, catalog, query.start_date).itinerary;
  CommonsenseReport report;
  auto & v = report.violations;
  const auto append = [&v](std::vector<Violation> xs) {
    for (auto & x : xs) v.push_back(std::move(x));
  };
  append(check_completeness(it, query, catalog));
  append(check_chronology(resolved, query.start_date));
  append(check_location_consistency(it, query, catalog));
  append(check_operating_hours(resolved, catalog));
  append(check_travel_blockout(resolved));
  append(check_transport_consistency(it, query, catalog));
  report.passed = v.empty();
  return {report.passed ? kCommonsensePass : kCommonsenseFail, std::move(report)};
}

}  // namespace tripscore
