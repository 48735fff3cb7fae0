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

#ifndef TRIPSCORE__COMMONSENSE_CHECKER_HPP_
#define TRIPSCORE__COMMONSENSE_CHECKER_HPP_

#include <utility>
#include <vector>

#include "tripscore/format_checker.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

inline constexpr int kCommonsensePass = 1;
inline constexpr int kCommonsenseFail = -1;

// Departures earlier than this keep the rest of the day before them empty.
inline constexpr ClockTime kEarlyDepartureCutoff{10 * 60};

struct CommonsenseReport
{
  bool passed = false;
  std::vector<Violation> violations;
};

/// Every day but the last needs a hotel; trips that leave the origin need an
/// outbound leg into the first destination and a leg back to the origin.
std::vector<Violation> check_completeness(const Itinerary & itinerary, const Query & query,
                                          const ReferenceCatalog & catalog);

/// Starts must not decrease in list order within a day. A transport must sit
/// in the block whose period contains its departure, on that day's date.
std::vector<Violation> check_chronology(const Itinerary & resolved, Date start_date);

/// Walks a current-city register from the origin. Only a leg leaving the
/// register city moves it; POIs, hotels and legs elsewhere are violations.
std::vector<Violation> check_location_consistency(const Itinerary & itinerary, const Query & query,
                                                  const ReferenceCatalog & catalog);

/// Each POI visit must fit one open window valid on its date. Unknown
/// calendars never fail.
std::vector<Violation> check_operating_hours(const Itinerary & resolved, const ReferenceCatalog & catalog);

/// No POI or hotel may overlap a same-day transport, and nothing may start
/// before a same-day departure earlier than 10:00.
std::vector<Violation> check_travel_blockout(const Itinerary & resolved);

/// Legs must chain (each departs where the previous arrived) and visit the
/// destinations in query order, with no revisits, skips or legs after the
/// trip has returned home.
std::vector<Violation> check_transport_consistency(const Itinerary & itinerary, const Query & query,
                                                   const ReferenceCatalog & catalog);

/// Runs all six checks. Throws PreconditionError when `format` failed.
std::pair<int, CommonsenseReport> evaluate_commonsense(const FormatReport & format, const Itinerary & itinerary,
                                                       const Query & query, const ReferenceCatalog & catalog);

}  // namespace tripscore

#endif  // TRIPSCORE__COMMONSENSE_CHECKER_HPP_
