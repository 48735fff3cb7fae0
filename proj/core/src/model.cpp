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

#include "tripscore/model.hpp"

#include <cstdio>
#include <utility>

namespace tripscore
{
namespace
{

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view lookup(const NameTable<E, N> & table, E value)
{
  for (const auto & [e, name] : table) {
    if (e == value) {
      return name;
    }
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> reverse_lookup(const NameTable<E, N> & table, std::string_view text)
{
  for (const auto & [e, name] : table) {
    if (name == text) {
      return e;
    }
  }
  return std::nullopt;
}

constexpr NameTable<Period, 3> kPeriodNames{{
  {Period::Morning, "Morning"},
  {Period::Afternoon, "Afternoon"},
  {Period::Evening, "Evening"},
}};

constexpr NameTable<ActivityKind, 3> kKindNames{{
  {ActivityKind::Poi, "poi"},
  {ActivityKind::Hotel, "hotel"},
  {ActivityKind::Transportation, "transportation"},
}};

constexpr NameTable<TransportMode, 6> kModeNames{{
  {TransportMode::Train, "train"},
  {TransportMode::Flight, "flight"},
  {TransportMode::Bus, "bus"},
  {TransportMode::Driving, "driving"},
  {TransportMode::Ferry, "ferry"},
  {TransportMode::Ship, "ship"},
}};

constexpr NameTable<EffortClass, 5> kEffortClassNames{{
  {EffortClass::Hiking, "hiking"},
  {EffortClass::ThemePark, "themePark"},
  {EffortClass::MountainClimbing, "mountainClimbing"},
  {EffortClass::Cycling, "cycling"},
  {EffortClass::Other, "other"},
}};

constexpr NameTable<Split, 2> kSplitNames{{
  {Split::Synthetic, "synthetic"},
  {Split::RealWorld, "realWorld"},
}};

constexpr NameTable<Budget, 3> kBudgetNames{{
  {Budget::CostEffective, "costEffective"},
  {Budget::Comfortable, "comfortable"},
  {Budget::HighEnd, "highEnd"},
}};

constexpr NameTable<Pacing, 3> kPacingNames{{
  {Pacing::Relaxed, "relaxed"},
  {Pacing::Moderate, "moderate"},
  {Pacing::Compact, "compact"},
}};

constexpr NameTable<EffortLevel, 3> kEffortLevelNames{{
  {EffortLevel::Light, "light"},
  {EffortLevel::Moderate, "moderate"},
  {EffortLevel::Strenuous, "strenuous"},
}};

constexpr NameTable<Label, 3> kLabelNames{{
  {Label::A, "A"},
  {Label::B, "B"},
  {Label::Neither, "neither"},
}};

constexpr NameTable<ConstraintId, 10> kConstraintNames{{
  {ConstraintId::ResponseFormat, "ResponseFormat"},
  {ConstraintId::InformationVerification, "InformationVerification"},
  {ConstraintId::InformationAccuracy, "InformationAccuracy"},
  {ConstraintId::InformationRelevance, "InformationRelevance"},
  {ConstraintId::InformationCompleteness, "InformationCompleteness"},
  {ConstraintId::ChronologicalOrder, "ChronologicalOrder"},
  {ConstraintId::LocationConsistency, "LocationConsistency"},
  {ConstraintId::OperatingHours, "OperatingHours"},
  {ConstraintId::TravelBlockOut, "TravelBlockOut"},
  {ConstraintId::TransportConsistency, "TransportConsistency"},
}};

constexpr NameTable<ScoreSource, 3> kSourceNames{{
  {ScoreSource::Rule, "rule"},
  {ScoreSource::Judge, "judge"},
  {ScoreSource::RuleOnlyDefault, "ruleOnlyDefault"},
}};

// Parses exactly `width` decimal digits.
std::optional<int> fixed_digits(std::string_view s, std::size_t pos, std::size_t width)
{
  if (pos + width > s.size()) {
    return std::nullopt;
  }
  int value = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (s[i] < '0' || s[i] > '9') {
      return std::nullopt;
    }
    value = value * 10 + (s[i] - '0');
  }
  return value;
}

}  // namespace

std::string_view to_string(Period p) { return lookup(kPeriodNames, p); }
std::string_view to_string(ActivityKind k) { return lookup(kKindNames, k); }
std::string_view to_string(TransportMode m) { return lookup(kModeNames, m); }
std::string_view to_string(EffortClass e) { return lookup(kEffortClassNames, e); }
std::string_view to_string(Split s) { return lookup(kSplitNames, s); }
std::string_view to_string(Budget b) { return lookup(kBudgetNames, b); }
std::string_view to_string(Pacing p) { return lookup(kPacingNames, p); }
std::string_view to_string(EffortLevel e) { return lookup(kEffortLevelNames, e); }
std::string_view to_string(Label l) { return lookup(kLabelNames, l); }
std::string_view to_string(ConstraintId c) { return lookup(kConstraintNames, c); }
std::string_view to_string(ScoreSource s) { return lookup(kSourceNames, s); }

std::optional<Period> parse_period(std::string_view s) { return reverse_lookup(kPeriodNames, s); }
std::optional<ActivityKind> parse_activity_kind(std::string_view s)
{
  return reverse_lookup(kKindNames, s);
}
std::optional<TransportMode> parse_transport_mode(std::string_view s)
{
  return reverse_lookup(kModeNames, s);
}
std::optional<EffortClass> parse_effort_class(std::string_view s)
{
  return reverse_lookup(kEffortClassNames, s);
}
std::optional<Split> parse_split(std::string_view s) { return reverse_lookup(kSplitNames, s); }
std::optional<Budget> parse_budget(std::string_view s) { return reverse_lookup(kBudgetNames, s); }
std::optional<Pacing> parse_pacing(std::string_view s) { return reverse_lookup(kPacingNames, s); }
std::optional<EffortLevel> parse_effort_level(std::string_view s)
{
  return reverse_lookup(kEffortLevelNames, s);
}
std::optional<Label> parse_label(std::string_view s) { return reverse_lookup(kLabelNames, s); }
std::optional<ConstraintId> parse_constraint_id(std::string_view s)
{
  return reverse_lookup(kConstraintNames, s);
}
std::optional<ScoreSource> parse_score_source(std::string_view s)
{
  return reverse_lookup(kSourceNames, s);
}

std::optional<Date> parse_date(std::string_view s)
{
  using namespace std::chrono;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') {
    return std::nullopt;
  }
  const auto y = fixed_digits(s, 0, 4);
  const auto m = fixed_digits(s, 5, 2);
  const auto d = fixed_digits(s, 8, 2);
  if (!y || !m || !d) {
    return std::nullopt;
  }
  const year_month_day ymd{year{*y}, month{static_cast<unsigned>(*m)}, day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) {
    return std::nullopt;
  }
  return local_days{ymd};
}

std::optional<ClockTime> parse_clock(std::string_view s)
{
  if (s.size() != 5 || s[2] != ':') {
    return std::nullopt;
  }
  const auto h = fixed_digits(s, 0, 2);
  const auto m = fixed_digits(s, 3, 2);
  if (!h || !m || *h > 23 || *m > 59) {
    return std::nullopt;
  }
  return ClockTime{*h * 60 + *m};
}

std::optional<DateTime> parse_datetime(std::string_view s)
{
  if (s.size() != 16 || (s[10] != 'T' && s[10] != ' ')) {
    return std::nullopt;
  }
  const auto d = parse_date(s.substr(0, 10));
  const auto t = parse_clock(s.substr(11, 5));
  if (!d || !t) {
    return std::nullopt;
  }
  return DateTime{*d} + *t;
}

std::string format_date(Date d)
{
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(
    buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
    static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string format_clock(ClockTime t)
{
  const auto total = t.count();
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", static_cast<int>(total / 60), static_cast<int>(total % 60));
  return buf;
}

std::string format_datetime(DateTime t) { return format_date(date_of(t)) + "T" + format_clock(clock_of(t)); }

// ---------------------------------------------------------------------------

const Poi * ReferenceCatalog::find_poi(const std::string & id) const
{
  const auto it = pois.find(id);
  return it == pois.end() ? nullptr : &it->second;
}

const Hotel * ReferenceCatalog::find_hotel(const std::string & id) const
{
  const auto it = hotels.find(id);
  return it == hotels.end() ? nullptr : &it->second;
}

const TransportLeg * ReferenceCatalog::find_transport(const std::string & id) const
{
  const auto it = transports.find(id);
  return it == transports.end() ? nullptr : &it->second;
}

bool ReferenceCatalog::contains(ActivityKind kind, const std::string & id) const
{
  return name_of(kind, id).has_value();
}

std::optional<std::string> ReferenceCatalog::name_of(ActivityKind kind, const std::string & id) const
{
  switch (kind) {
    case ActivityKind::Poi:
      if (const auto * p = find_poi(id)) return p->name;
      break;
    case ActivityKind::Hotel:
      if (const auto * h = find_hotel(id)) return h->name;
      break;
    case ActivityKind::Transportation:
      if (const auto * t = find_transport(id)) return t->number;
      break;
  }
  return std::nullopt;
}

bool WeightConfig::valid() const
{
  for (const double w : soft) {
    if (!(w > 0.0)) return false;
  }
  for (const double w : pref_synthetic) {
    if (!(w > 0.0)) return false;
  }
  return pref_real_world > 0.0 && soft_multiplier > 0.0 && pref_multiplier_synthetic > 0.0 &&
         pref_multiplier_real_world > 0.0;
}

WeightConfig WeightConfig::optimized()
{
  WeightConfig w;
  w.soft = {0.70, 0.50, 0.40, 0.20, 0.70, 0.10, 0.20};
  // budget, pacing, attraction, effort
  w.pref_synthetic = {0.60, 0.60, 0.20, 0.60};
  w.pref_real_world = 1.00;
  w.soft_multiplier = 1.00;
  w.pref_multiplier_synthetic = 0.10;
  w.pref_multiplier_real_world = 1.40;
  return w;
}

}  // namespace tripscore
