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

#ifndef TRIPSCORE__MODEL_HPP_
#define TRIPSCORE__MODEL_HPP_

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tripscore
{

// All clock values are destination-local; no zone arithmetic happens anywhere.
using Date = std::chrono::local_days;
using DateTime = std::chrono::local_time<std::chrono::minutes>;
using ClockTime = std::chrono::minutes;  // minutes since local midnight

struct GeoPoint
{
  double lat = 0.0;
  double lon = 0.0;

  bool valid() const { return lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0; }
  friend bool operator==(const GeoPoint &, const GeoPoint &) = default;
};

enum class Period { Morning, Afternoon, Evening };
enum class ActivityKind { Poi, Hotel, Transportation };
enum class TransportMode { Train, Flight, Bus, Driving, Ferry, Ship };
enum class EffortClass { Hiking, ThemePark, MountainClimbing, Cycling, Other };
enum class Split { Synthetic, RealWorld };
enum class Budget { CostEffective, Comfortable, HighEnd };
enum class Pacing { Relaxed, Moderate, Compact };
enum class EffortLevel { Light, Moderate, Strenuous };
enum class Label { A, B, Neither };

// Rule-checked items of the format and commonsense families.
enum class ConstraintId {
  ResponseFormat,
  InformationVerification,
  InformationAccuracy,
  InformationRelevance,
  InformationCompleteness,
  ChronologicalOrder,
  LocationConsistency,
  OperatingHours,
  TravelBlockOut,
  TransportConsistency,
};

inline constexpr std::array<ConstraintId, 4> kFormatConstraints{
  ConstraintId::ResponseFormat, ConstraintId::InformationVerification,
  ConstraintId::InformationAccuracy, ConstraintId::InformationRelevance};

inline constexpr std::array<ConstraintId, 6> kCommonsenseConstraints{
  ConstraintId::InformationCompleteness, ConstraintId::ChronologicalOrder,
  ConstraintId::LocationConsistency,     ConstraintId::OperatingHours,
  ConstraintId::TravelBlockOut,          ConstraintId::TransportConsistency};

// ---------------------------------------------------------------------------
// Itinerary tree

struct Activity
{
  ActivityKind kind = ActivityKind::Poi;
  std::string id;  // empty only for external attractions
  std::string name;
  std::optional<DateTime> resolved_start;
  std::optional<DateTime> resolved_end;

  bool external() const { return kind == ActivityKind::Poi && id.empty(); }
  friend bool operator==(const Activity &, const Activity &) = default;
};

/// One `**[Name](id)**` or `**[Name]**` mention inside a block description.
struct EntityLink
{
  std::string name;
  std::string id;  // empty for the external-attraction form
  bool external = false;
  friend bool operator==(const EntityLink &, const EntityLink &) = default;
};

struct PeriodBlock
{
  Period period = Period::Morning;
  std::string description;
  std::vector<Activity> activities;
  std::vector<EntityLink> links;  // derived from description when loaded
  friend bool operator==(const PeriodBlock &, const PeriodBlock &) = default;
};

struct DayPlan
{
  int day_index = 1;
  std::string schedule_title;
  std::vector<PeriodBlock> blocks;
  friend bool operator==(const DayPlan &, const DayPlan &) = default;
};

struct Tips
{
  std::string title;
  std::string info;
  friend bool operator==(const Tips &, const Tips &) = default;
};

struct Itinerary
{
  std::string name;
  std::string recommend_reason;
  std::vector<DayPlan> days;
  std::optional<Tips> tips;
  friend bool operator==(const Itinerary &, const Itinerary &) = default;
};

// ---------------------------------------------------------------------------
// Reference catalog

/// Open window valid on every date in [from, to] (inclusive), open <= t < close.
struct OpenWindow
{
  Date from;
  Date to;
  ClockTime open{0};
  ClockTime close{0};
  friend bool operator==(const OpenWindow &, const OpenWindow &) = default;
};

struct Poi
{
  std::string id;
  std::string name;
  std::string city;
  GeoPoint location;
  // nullopt means the hours are unknown; an empty list means never open.
  std::optional<std::vector<OpenWindow>> open_calendar;
  std::set<std::string> tags;
  std::optional<double> recommended_duration_hours;
  EffortClass effort = EffortClass::Other;
  friend bool operator==(const Poi &, const Poi &) = default;
};

struct Hotel
{
  std::string id;
  std::string name;
  std::string city;
  int stars = 0;
  GeoPoint location;
  friend bool operator==(const Hotel &, const Hotel &) = default;
};

struct TransportLeg
{
  std::string id;
  std::string number;  // trainNo / flightNo / shipName
  TransportMode mode = TransportMode::Train;
  std::string origin_city;
  std::string destination_city;
  DateTime depart;
  DateTime arrive;
  friend bool operator==(const TransportLeg &, const TransportLeg &) = default;
};

struct ReferenceCatalog
{
  std::map<std::string, Poi> pois;
  std::map<std::string, Hotel> hotels;
  std::map<std::string, TransportLeg> transports;

  const Poi * find_poi(const std::string & id) const;
  const Hotel * find_hotel(const std::string & id) const;
  const TransportLeg * find_transport(const std::string & id) const;
  /// True when the id exists in the map matching `kind`.
  bool contains(ActivityKind kind, const std::string & id) const;
  /// Catalog display name for (kind, id): poi/hotel name or leg number.
  std::optional<std::string> name_of(ActivityKind kind, const std::string & id) const;

  friend bool operator==(const ReferenceCatalog &, const ReferenceCatalog &) = default;
};

// ---------------------------------------------------------------------------
// Query

struct PreferenceProfile
{
  std::optional<Budget> budget;
  std::optional<Pacing> pacing;
  std::optional<std::set<std::string>> attraction_tags;
  std::optional<EffortLevel> effort;
  friend bool operator==(const PreferenceProfile &, const PreferenceProfile &) = default;
};

struct Query
{
  std::string query_id;
  std::string origin_city;
  std::vector<std::string> destinations;
  Date start_date;
  int duration_days = 1;
  Split split = Split::Synthetic;
  PreferenceProfile preferences;
  std::string request_text;
  friend bool operator==(const Query &, const Query &) = default;
};

// ---------------------------------------------------------------------------
// Scores

struct Violation
{
  ConstraintId constraint = ConstraintId::ResponseFormat;
  std::optional<int> day_index;
  std::string detail;
  friend bool operator==(const Violation &, const Violation &) = default;
};

enum class ScoreSource { Rule, Judge, RuleOnlyDefault };

inline constexpr std::size_t kSoftComponents = 7;
inline constexpr std::size_t kSyntheticPrefComponents = 4;

struct SoftVector
{
  double schedule = 1.0;
  double hotel = 1.0;
  double daytime = 1.0;
  double unique = 1.0;
  double clustering = 1.0;
  double iconic = 0.5;
  double diversity = 0.5;
  ScoreSource iconic_source = ScoreSource::RuleOnlyDefault;
  ScoreSource diversity_source = ScoreSource::RuleOnlyDefault;

  /// Component order matches the soft weight vector: schedule, hotel,
  /// daytime, unique, clustering, iconic, diversity.
  std::array<double, kSoftComponents> values() const
  {
    return {schedule, hotel, daytime, unique, clustering, iconic, diversity};
  }
  friend bool operator==(const SoftVector &, const SoftVector &) = default;
};

/// Exactly one arm is meaningful, chosen by `split`. Synthetic components
/// whose preference is absent from the query keep value 1 and are flagged
/// not applicable; they are excluded from the weighted mean.
struct PrefVector
{
  Split split = Split::Synthetic;
  // budget, pacing, attraction, effort
  std::array<double, kSyntheticPrefComponents> synthetic{1.0, 1.0, 1.0, 1.0};
  std::array<bool, kSyntheticPrefComponents> applicable{false, false, false, false};
  double user_request = 0.5;
  ScoreSource user_request_source = ScoreSource::RuleOnlyDefault;
  friend bool operator==(const PrefVector &, const PrefVector &) = default;
};

struct ScoreBreakdown
{
  int format_score = 1;                  // -3 or +1
  std::optional<int> commonsense_score;  // -1 or +1; absent when format gated
  std::optional<SoftVector> soft;        // absent when format gated
  std::optional<PrefVector> pref;        // absent when format gated
  std::vector<Violation> violations;
  double reward = 0.0;
  friend bool operator==(const ScoreBreakdown &, const ScoreBreakdown &) = default;
};

// ---------------------------------------------------------------------------
// Weights

struct WeightConfig
{
  // w1: schedule, hotel, daytime, unique, clustering, iconic, diversity
  std::array<double, kSoftComponents> soft{};
  // w2 for synthetic queries: budget, pacing, attraction, effort
  std::array<double, kSyntheticPrefComponents> pref_synthetic{};
  // w2 for real-world queries (single user-request component)
  double pref_real_world = 1.0;
  double soft_multiplier = 1.0;             // w3
  double pref_multiplier_synthetic = 0.1;   // w4, synthetic
  double pref_multiplier_real_world = 1.4;  // w4, real-world

  double pref_multiplier(Split split) const
  {
    return split == Split::Synthetic ? pref_multiplier_synthetic : pref_multiplier_real_world;
  }
  /// True when every weight is strictly positive.
  bool valid() const;

  /// The published optimized weights.
  static WeightConfig optimized();

  friend bool operator==(const WeightConfig &, const WeightConfig &) = default;
};

// ---------------------------------------------------------------------------
// Annotations

struct AnnotationPair
{
  std::string pair_id;
  std::string query_id;
  Itinerary plan_a;
  Itinerary plan_b;
  std::vector<Label> rater_labels;
  std::optional<Label> majority_label;
  // Optional pre-computed sub-scores; when present calibration uses them
  // instead of re-scoring the plans.
  std::optional<ScoreBreakdown> scores_a;
  std::optional<ScoreBreakdown> scores_b;
  friend bool operator==(const AnnotationPair &, const AnnotationPair &) = default;
};

// ---------------------------------------------------------------------------
// Enum <-> text. Parsers return nullopt for unknown spellings.

std::string_view to_string(Period p);
std::string_view to_string(ActivityKind k);
std::string_view to_string(TransportMode m);
std::string_view to_string(EffortClass e);
std::string_view to_string(Split s);
std::string_view to_string(Budget b);
std::string_view to_string(Pacing p);
std::string_view to_string(EffortLevel e);
std::string_view to_string(Label l);
std::string_view to_string(ConstraintId c);
std::string_view to_string(ScoreSource s);

std::optional<Period> parse_period(std::string_view s);
std::optional<ActivityKind> parse_activity_kind(std::string_view s);
std::optional<TransportMode> parse_transport_mode(std::string_view s);
std::optional<EffortClass> parse_effort_class(std::string_view s);
std::optional<Split> parse_split(std::string_view s);
std::optional<Budget> parse_budget(std::string_view s);
std::optional<Pacing> parse_pacing(std::string_view s);
std::optional<EffortLevel> parse_effort_level(std::string_view s);
std::optional<Label> parse_label(std::string_view s);
std::optional<ConstraintId> parse_constraint_id(std::string_view s);
std::optional<ScoreSource> parse_score_source(std::string_view s);

// Date / time text forms: "YYYY-MM-DD", "HH:MM", "YYYY-MM-DDTHH:MM".
std::optional<Date> parse_date(std::string_view s);
std::optional<ClockTime> parse_clock(std::string_view s);
std::optional<DateTime> parse_datetime(std::string_view s);
std::string format_date(Date d);
std::string format_clock(ClockTime t);
std::string format_datetime(DateTime t);

/// Date part of a local datetime.
inline Date date_of(DateTime t) { return std::chrono::floor<std::chrono::days>(t); }
/// Minutes since local midnight.
inline ClockTime clock_of(DateTime t) { return t - date_of(t); }

}  // namespace tripscore

#endif  // TRIPSCORE__MODEL_HPP_
