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

#ifndef TRIPSCORE__FORMAT_CHECKER_HPP_
#define TRIPSCORE__FORMAT_CHECKER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "tripscore/model.hpp"

namespace tripscore
{

inline constexpr int kFormatPass = 1;
inline constexpr int kFormatFail = -3;

struct FormatReport
{
  bool passed = false;
  std::vector<Violation> violations;
};

struct FormatOutcome
{
  int score = kFormatFail;
  FormatReport report;
  std::optional<Itinerary> itinerary;  // set whenever the text parsed
};

/// ResponseFormat: the text must load as an itinerary and every required
/// text field must be non-empty.
std::optional<Violation> check_response_format(std::string_view raw_text);
std::optional<Violation> check_required_fields(const Itinerary & itinerary);

/// InformationVerification: hotel, transport and id-carrying POI entries
/// must exist in the catalog under their declared type.
std::vector<Violation> check_verification(const Itinerary & itinerary, const ReferenceCatalog & catalog);

/// InformationAccuracy: names match the catalog after normalization, and
/// clock times written next to a transport link match its timetable.
std::vector<Violation> check_accuracy(const Itinerary & itinerary, const ReferenceCatalog & catalog);

/// InformationRelevance: description links stay within their block's
/// detailList, and every detailList entry is mentioned somewhere that day.
std::vector<Violation> check_relevance(const Itinerary & itinerary);

/// Runs all four checks without short-circuiting. Score is +1 iff no
/// violation was found, -3 otherwise.
FormatOutcome evaluate_format(std::string_view raw_text, const ReferenceCatalog & catalog);

}  // namespace tripscore

#endif  // TRIPSCORE__FORMAT_CHECKER_HPP_
