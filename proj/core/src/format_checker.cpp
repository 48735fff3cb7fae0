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

#include "tripscore/format_checker.hpp"

#include <set>
#include <string>

#include "tripscore/errors.hpp"
#include "tripscore/io.hpp"
#include "tripscore/text.hpp"

namespace tripscore
{
namespace
{

Violation make(ConstraintId id, std::optional<int> day, std::string detail)
{
  return Violation{id, day, std::move(detail)};
}

std::string quoted(const std::string & s) { return "\"" + s + "\""; }

}  // namespace

std::optional<Violation> check_required_fields(const Itinerary & it)
{
  auto missing = [](std::optional<int> day, const std::string & field) {
    return make(ConstraintId::ResponseFormat, day, "required field " + field + " is empty");
  };
  if (normalize_name(it.name).empty()) return missing(std::nullopt, "itineraryName");
  if (normalize_name(it.recommend_reason).empty()) return missing(std::nullopt, "recommendReason");
  for (std::size_t d = 0; d < it.days.size(); ++d) {
    const auto & day = it.days[d];
    const std::string at = "dayInfos[" + std::to_string(d) + "]";
    if (normalize_name(day.schedule_title).empty()) return missing(day.day_index, at + ".scheduleTitle");
    for (std::size_t b = 0; b < day.blocks.size(); ++b) {
      const auto & block = day.blocks[b];
      const std::string bat = at + ".scheduleDetail[" + std::to_string(b) + "]";
      if (normalize_name(block.description).empty()) return missing(day.day_index, bat + ".description");
      for (std::size_t a = 0; a < block.activities.size(); ++a) {
        if (normalize_name(block.activities[a].name).empty()) {
          return missing(day.day_index, bat + ".detailList[" + std::to_string(a) + "].name");
        }
      }
    }
  }
  if (it.tips) {
    if (normalize_name(it.tips->title).empty()) return missing(std::nullopt, "tips.title");
    if (normalize_name(it.tips->info).empty()) return missing(std::nullopt, "tips.info");
  }
  return std::nullopt;
}

std::optional<Violation> check_response_format(std::string_view raw_text)
{
  try {
    return check_required_fields(load_itinerary(raw_text));
  } catch (const Error & e) {
    return make(ConstraintId::ResponseFormat, std::nullopt, e.what());
  }
}

std::vector<Violation> check_verification(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.id.empty()) continue;  // external attraction
        if (!catalog.contains(act.kind, act.id)) {
          out.push_back(make(
            ConstraintId::InformationVerification, day.day_index,
            std::string(to_string(act.kind)) + " id " + quoted(act.id) + " is not in the reference data"));
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_accuracy(const Itinerary & it, const ReferenceCatalog & catalog)
{
  std::vector<Violation> out;
  for (const auto & day : it.days) {
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        if (act.id.empty()) continue;
        const auto expected = catalog.name_of(act.kind, act.id);
        if (!expected) continue;  // verification owns unknown ids
        if (normalize_name(act.name) != normalize_name(*expected)) {
          out.push_back(make(
            ConstraintId::InformationAccuracy, day.day_index,
            "name " + quoted(act.name) + " does not match " + quoted(*expected) + " for id " + quoted(act.id)));
        }
      }
      for (const auto & mention : link_time_mentions(block.description)) {
        if (mention.link.external) continue;
        const auto * leg = catalog.find_transport(mention.link.id);
        if (leg == nullptr) continue;
        const ClockTime dep = clock_of(leg->depart);
        const ClockTime arr = clock_of(leg->arrive);
        for (const ClockTime t : mention.times) {
          if (t != dep && t != arr) {
            out.push_back(make(
              ConstraintId::InformationAccuracy, day.day_index,
              "time " + format_clock(t) + " stated for " + quoted(leg->number) + " does not match its timetable (" +
                format_clock(dep) + "-" + format_clock(arr) + ")"));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_relevance(const Itinerary & it)
{
  std::vector<Violation> out;
  for (const auto & day : it.days) {
    std::set<std::string> linked_ids;
    std::set<std::string> linked_external;
    for (const auto & block : day.blocks) {
      std::set<std::string> block_ids;
      for (const auto & act : block.activities) {
        if (!act.id.empty()) block_ids.insert(act.id);
      }
      for (const auto & link : block.links) {
        if (link.external) {
          linked_external.insert(normalize_name(link.name));
          continue;
        }
        linked_ids.insert(link.id);
        if (block_ids.count(link.id) == 0) {
          out.push_back(make(
            ConstraintId::InformationRelevance, day.day_index,
            "description of the " + std::string(to_string(block.period)) + " block mentions " + quoted(link.id) +
              " which is not in its detailList"));
        }
      }
    }
    for (const auto & block : day.blocks) {
      for (const auto & act : block.activities) {
        const bool mentioned =
          act.id.empty() ? linked_external.count(normalize_name(act.name)) > 0 : linked_ids.count(act.id) > 0;
        if (!mentioned) {
          out.push_back(make(
            ConstraintId::InformationRelevance, day.day_index,
            std::string(to_string(act.kind)) + " " + quoted(act.name) + " is never described on its day"));
        }
      }
    }
  }
  return out;
}

FormatOutcome evaluate_format(std::string_view raw_text, const ReferenceCatalog & catalog)
{
  FormatOutcome outcome;
  try {
    outcome.itinerary = load_itinerary(raw_text);
  } catch (const Error & e) {
    outcome.report.violations.push_back(make(ConstraintId::ResponseFormat, std::nullopt, e.what()));
    return outcome;
  }
  auto & v = outcome.report.violations;
  const Itinerary & it = *outcome.itinerary;
  if (auto f = check_required_fields(it)) v.push_back(std::move(*f));
  for (auto & x : check_verification(it, catalog)) v.push_back(std::move(x));
  for (auto & x : check_accuracy(it, catalog)) v.push_back(std::move(x));
  for (auto & x : check_relevance(it)) v.push_back(std::move(x));
  outcome.report.passed = v.empty();
  outcome.score = outcome.report.passed ? kFormatPass : kFormatFail;
  return outcome;
}

}  // namespace tripscore
