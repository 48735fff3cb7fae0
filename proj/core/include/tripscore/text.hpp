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

#ifndef TRIPSCORE__TEXT_HPP_
#define TRIPSCORE__TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tripscore/model.hpp"

namespace tripscore
{

/// Unicode NFC, then runs of whitespace collapsed to one space and trimmed.
std::string normalize_name(std::string_view text);

/// Entity mentions in a block description, in order of appearance.
///   **[Name](id)**  catalog entity
///   **[Name]**      external attraction
///   **Name**        external attraction (plain bold form)
std::vector<EntityLink> extract_links(std::string_view description);

/// Clock times ("9:10", "09:10") mentioned right after a link: from the end
/// of the link up to the next link or the end of the sentence.
struct LinkTimes
{
  EntityLink link;
  std::vector<ClockTime> times;
};
std::vector<LinkTimes> link_time_mentions(std::string_view description);

/// Recomputes every block's `links` from its description.
void refresh_links(Itinerary & itinerary);

}  // namespace tripscore

#endif  // TRIPSCORE__TEXT_HPP_
