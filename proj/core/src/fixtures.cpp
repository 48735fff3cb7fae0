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

#include "tripscore/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>

#include "tripscore/errors.hpp"
#include "tripscore/random.hpp"
#include "tripscore/text.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{
namespace
{

using std::chrono::days;
using std::chrono::hours;
using std::chrono::minutes;

constexpr std::array<const char *, kMaxFixtureCities> kCityNames{
  "Aldmere", "Brackenford", "Corriston", "Dunhallow", "Elderwick", "Fennmoor", "Greyhaven", "Highcliff"};

constexpr std::array<const char *, 12> kPoiKinds{
  "Museum", "Gardens", "Old Town", "Cathedral", "Market Hall", "Lookout",
  "Gallery", "Castle", "Lake Park", "Stone Bridge", "Aquarium", "Botanic House"};

constexpr std::array<const char *, 8> kTags{"museum", "history", "nature", "park",
                                            "art",    "shopping", "food", "architecture"};

constexpr std::array<const char *, 3> kHotelStyles{"Grand", "Central", "Riverside"};

// Departure slots offered every day between every ordered pair of cities.
constexpr std::array<int, 4> kLegSlots{8 * 60 + 30, 13 * 60 + 30, 19 * 60, 22 * 60 + 30};
constexpr std::size_t kMorningSlot = 0;
constexpr std::size_t kReturnSlot = 2;
constexpr std::size_t kLateSlot = 3;

std::string two_digits(int v)
{
  const std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::string poi_id(int city, int k) { return "poi-" + std::to_string(city) + "-" + two_digits(k); }
std::string hotel_id(int city, int k) { return "hotel-" + std::to_string(city) + "-" + std::to_string(k); }
std::string leg_id(int from, int to, int day_offset, std::size_t slot)
{
  return "leg-" + std::to_string(from) + std::to_string(to) + "-" + two_digits(day_offset) + "-" +
         std::to_string(slot);
}

GeoPoint city_center(int city) { return {40.0 + 1.5 * city, 10.0 + 2.0 * city}; }

GeoPoint jitter(SplitMix64 & rng, GeoPoint c)
{
  return {c.lat + (rng.unit() - 0.5) * 0.1, c.lon + (rng.unit() - 0.5) * 0.1};
}

bool open_on(const Poi & poi, Date date)
{
  if (!poi.open_calendar) return true;
  return std::any_of(poi.open_calendar->begin(), poi.open_calendar->end(),
                     [date](const OpenWindow & w) { return w.from <= date && date <= w.to; });
}

// ---------------------------------------------------------------------------
// plan under construction

struct Item
{
  Activity act;
  std::string link_name;  // name written in the description link
  bool linked = true;
  std::string claim;      // plant that owns this item, if any
};

struct Block
{
  Period period;
  std::vector<Item> items;
};

struct Day
{
  int index;
  int city;
  Date date;
  std::string title;
  std::vector<Block> blocks;

  Block * block(Period p)
  {
    for (auto & b : blocks) {
      if (b.period == p) return &b;
    }
    return nullptr;
  }
  Block & ensure(Period p)
  {
    if (Block * b = block(p)) return *b;
    blocks.push_back({p, {}});
    std::sort(blocks.begin(), blocks.end(), [](const Block & a, const Block & b) { return a.period < b.period; });
    return *block(p);
  }
};

std::string sentence(const Item & item, const ReferenceCatalog & catalog)
{
  const std::string mention = !item.linked ? item.link_name
                              : item.act.id.empty() ? "**[" + item.link_name + "]**"
                                                    : "**[" + item.link_name + "](" + item.act.id + ")**";
  switch (item.act.kind) {
    case ActivityKind::Transportation: {
      const auto * leg = catalog.find_transport(item.act.id);
      if (leg == nullptr) return "Take " + mention + ".";
      return "Take " + mention + " departing " + format_clock(clock_of(leg->depart)) + " and arriving " +
             format_clock(clock_of(leg->arrive)) + ".";
    }
    case ActivityKind::Hotel:
      return "Check in at " + mention + " for the night.";
    case ActivityKind::Poi:
      return item.act.id.empty() ? "Stroll around " + mention + "." : "Visit " + mention + ".";
  }
  return mention;
}

class Planner
{
public:
  Planner(const FixtureSpec & spec, const ReferenceCatalog & catalog) : spec_(spec), catalog_(catalog), rng_(spec.seed)
  {
    for (const auto & [id, poi] : catalog.pois) pois_by_city_[city_index(poi.city)].push_back(&poi);
  }

  Fixture run()
  {
    make_query();
    make_days();
    apply_plants();
    return finish();
  }

private:
  static int city_index(const std::string & name)
  {
    for (int i = 0; i < kMaxFixtureCities; ++i) {
      if (name == kCityNames[static_cast<std::size_t>(i)]) return i;
    }
    return -1;
  }

  void make_query()
  {
    const int c = spec_.cities_count;
    const int d = spec_.duration_days;
    origin_ = static_cast<int>(rng_.below(static_cast<std::uint64_t>(c)));
    std::vector<int> others;
    for (int i = 0; i < c; ++i) {
      if (i != origin_) others.push_back(i);
    }
    for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[rng_.below(i)]);
    const int k = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(std::min({c - 1, d, 3}))));
    stops_.assign(others.begin(), others.begin() + k);

    // first day at each stop: day 1 for the first, distinct later days for the rest
    std::vector<int> candidates;
    for (int day = 2; day <= d; ++day) candidates.push_back(day);
    for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng_.below(i)]);
    arrivals_ = {1};
    arrivals_.insert(arrivals_.end(), candidates.begin(), candidates.begin() + (k - 1));
    std::sort(arrivals_.begin(), arrivals_.end());

    offset_ = static_cast<int>(rng_.below(static_cast<std::uint64_t>(kCatalogSpanDays - d + 1)));

    q_.query_id = "q-" + std::to_string(spec_.seed);
    q_.origin_city = kCityNames[static_cast<std::size_t>(origin_)];
    for (const int s : stops_) q_.destinations.push_back(kCityNames[static_cast<std::size_t>(s)]);
    q_.start_date = catalog_start_date() + days{offset_};
    q_.duration_days = d;
    q_.split = spec_.split;

    std::string dest_list;
    for (const auto & name : q_.destinations) dest_list += (dest_list.empty() ? "" : ", ") + name;
    q_.request_text =
      "Plan a " + std::to_string(d) + "-day trip from " + q_.origin_city + " to " + dest_list + ".";
    if (spec_.split == Split::Synthetic) {
      auto & p = q_.preferences;
      if (rng_.chance(0.6)) p.budget = static_cast<Budget>(rng_.below(3));
      if (rng_.chance(0.6)) p.pacing = static_cast<Pacing>(rng_.below(3));
      if (rng_.chance(0.6)) {
        std::set<std::string> tags;
        const auto n = 1 + rng_.below(2);
        for (std::uint64_t i = 0; i < n; ++i) tags.insert(kTags[rng_.below(kTags.size())]);
        p.attraction_tags = tags;
      }
      if (rng_.chance(0.5)) p.effort = static_cast<EffortLevel>(rng_.below(3));
    }
  }

  const TransportLeg & leg(int from, int to, int day_index, std::size_t slot) const
  {
    const auto * l = catalog_.find_transport(leg_id(from, to, offset_ + day_index - 1, slot));
    if (l == nullptr) throw PreconditionError("generated catalog lacks a required leg");
    return *l;
  }

  Item leg_item(int from, int to, int day_index, std::size_t slot) const
  {
    const TransportLeg & l = leg(from, to, day_index, slot);
    return {{ActivityKind::Transportation, l.id, l.number, std::nullopt, std::nullopt}, l.number, true, {}};
  }

  static Item poi_item(const Poi & p)
  {
    return {{ActivityKind::Poi, p.id, p.name, std::nullopt, std::nullopt}, p.name, true, {}};
  }

  // Open POI in `city` on `date`, preferring ones not used yet.
  const Poi & pick_poi(int city, Date date)
  {
    std::vector<const Poi *> fresh;
    std::vector<const Poi *> open;
    for (const Poi * p : pois_by_city_[city]) {
      if (!open_on(*p, date)) continue;
      open.push_back(p);
      if (used_.count(p->id) == 0) fresh.push_back(p);
    }
    const auto & pool = fresh.empty() ? open : fresh;
    const Poi * p = pool[rng_.below(pool.size())];
    used_.insert(p->id);
    return *p;
  }

  void make_days()
  {
    const int d = spec_.duration_days;
    std::size_t stop = 0;
    int hotel_for_stop = -1;
    const Hotel * hotel = nullptr;
    for (int day = 1; day <= d; ++day) {
      Day plan{day, 0, q_.start_date + days{day - 1}, {}, {}};
      if (stop + 1 < arrivals_.size() && arrivals_[stop + 1] == day) ++stop;
      const int city = stops_[stop];
      plan.city = city;
      const std::string city_name = kCityNames[static_cast<std::size_t>(city)];
      plan.title = "Day " + std::to_string(day) + " in " + city_name;

      Block morning{Period::Morning, {}};
      if (day == 1) {
        morning.items.push_back(leg_item(origin_, city, day, kMorningSlot));
      } else if (arrivals_[stop] == day) {
        morning.items.push_back(leg_item(stops_[stop - 1], city, day, kMorningSlot));
      } else {
        morning.items.push_back(poi_item(pick_poi(city, plan.date)));
      }
      plan.blocks.push_back(std::move(morning));

      Block afternoon{Period::Afternoon, {}};
      afternoon.items.push_back(poi_item(pick_poi(city, plan.date)));
      if (rng_.chance(0.25)) {
        const std::string name = city_name + " Street Market";
        afternoon.items.push_back({{ActivityKind::Poi, "", name, std::nullopt, std::nullopt}, name, true, {}});
      } else {
        afternoon.items.push_back(poi_item(pick_poi(city, plan.date)));
      }
      plan.blocks.push_back(std::move(afternoon));

      Block evening{Period::Evening, {}};
      if (day < d) {
        if (hotel_for_stop != static_cast<int>(stop)) {
          hotel = catalog_.find_hotel(hotel_id(city, static_cast<int>(rng_.below(kHotelStyles.size()))));
          hotel_for_stop = static_cast<int>(stop);
        }
        evening.items.push_back(
          {{ActivityKind::Hotel, hotel->id, hotel->name, std::nullopt, std::nullopt}, hotel->name, true, {}});
      } else {
        Item ret = leg_item(city, origin_, day, kReturnSlot);
        ret.claim = "return";
        evening.items.push_back(std::move(ret));
      }
      plan.blocks.push_back(std::move(evening));
      days_.push_back(std::move(plan));
    }
  }

  // -------------------------------------------------------------------------
  // plants

  bool planted(ConstraintId id) const
  {
    return std::find(spec_.planted.begin(), spec_.planted.end(), id) != spec_.planted.end();
  }

  [[noreturn]] static void unsupported(ConstraintId id, const std::string & why)
  {
    throw UnsupportedViolation("cannot plant " + std::string(to_string(id)) + ": " + why);
  }

  void record(ConstraintId id, int day, std::string detail) { records_.push_back({id, day, std::move(detail)}); }

  Item * find_return()
  {
    for (auto & b : days_.back().blocks) {
      for (auto & it : b.items) {
        if (it.act.kind == ActivityKind::Transportation && it.claim.rfind("return", 0) == 0) return &it;
      }
    }
    return nullptr;
  }

  // Catalog POI items not yet claimed, latest day first.
  // The same attraction twice in one day would keep a second mention.
  static bool repeated_in_day(const Day & day, const Item & item)
  {
    int n = 0;
    for (const auto & b : day.blocks) {
      for (const auto & other : b.items) {
        n += other.act.kind == item.act.kind && other.act.id == item.act.id && other.link_name == item.link_name;
      }
    }
    return n > 1;
  }

  Item * free_poi(bool allow_external)
  {
    for (auto d = days_.rbegin(); d != days_.rend(); ++d) {
      for (auto & b : d->blocks) {
        for (auto & it : b.items) {
          if (it.act.kind != ActivityKind::Poi || !it.claim.empty()) continue;
          if (it.act.id.empty() && !allow_external) continue;
          if (repeated_in_day(*d, it)) continue;
          return &it;
        }
      }
    }
    return nullptr;
  }

  int day_of(const Item * item) const
  {
    for (const auto & d : days_) {
      for (const auto & b : d.blocks) {
        for (const auto & it : b.items) {
          if (&it == item) return d.index;
        }
      }
    }
    return 0;
  }

  void drop_empty_blocks()
  {
    for (auto & d : days_) {
      d.blocks.erase(std::remove_if(d.blocks.begin(), d.blocks.end(), [](const Block & b) { return b.items.empty(); }),
                     d.blocks.end());
    }
  }

  void apply_plants()
  {
    std::set<ConstraintId> seen;
    for (const ConstraintId id : spec_.planted) {
      if (!seen.insert(id).second) unsupported(id, "planted twice");
    }
    Day & first = days_.front();
    Day & last = days_.back();

    // Fixed targets first.
    if (planted(ConstraintId::InformationCompleteness)) {
      if (days_.size() >= 2) {
        Block & evening = *first.block(Period::Evening);
        record(ConstraintId::InformationCompleteness, 1, "removed hotel " + evening.items.front().act.id);
        evening.items.clear();
      } else {
        if (planted(ConstraintId::ChronologicalOrder) || planted(ConstraintId::TransportConsistency)) {
          unsupported(ConstraintId::InformationCompleteness, "a one-day trip needs its return leg for other plants");
        }
        Block & evening = *last.block(Period::Evening);
        record(ConstraintId::InformationCompleteness, last.index, "removed return leg " + evening.items.front().act.id);
        evening.items.clear();
      }
    }
    if (planted(ConstraintId::ChronologicalOrder)) {
      Block & evening = *last.block(Period::Evening);
      Item ret = evening.items.front();
      ret.claim = "return:chronology";
      evening.items.erase(evening.items.begin());
      last.block(Period::Afternoon)->items.push_back(ret);
      record(ConstraintId::ChronologicalOrder, last.index, "moved " + ret.act.id + " into the Afternoon block");
    }
    if (planted(ConstraintId::TransportConsistency)) {
      Item extra = leg_item(origin_, stops_.front(), last.index, kLateSlot);
      extra.claim = "transport";
      record(ConstraintId::TransportConsistency, last.index, "added " + extra.act.id + " after the return leg");
      last.ensure(Period::Evening).items.push_back(std::move(extra));
    }
    if (planted(ConstraintId::LocationConsistency)) {
      Item & slot = first.block(Period::Afternoon)->items[0];
      const Poi & other = pick_poi(origin_, first.date);
      record(ConstraintId::LocationConsistency, 1, "replaced " + slot.act.id + " with " + other.id + " in " + other.city);
      slot = poi_item(other);
      slot.claim = "location";
    }
    if (planted(ConstraintId::OperatingHours)) {
      Item & slot = first.block(Period::Afternoon)->items[1];
      const Poi * closed = nullptr;
      for (const Poi * p : pois_by_city_[first.city]) {
        if (p->open_calendar && !open_on(*p, first.date)) {
          closed = p;
          break;
        }
      }
      if (closed == nullptr) unsupported(ConstraintId::OperatingHours, "no closed attraction on the first day");
      record(ConstraintId::OperatingHours, 1, "replaced " + (slot.act.id.empty() ? slot.act.name : slot.act.id) +
                                                " with " + closed->id + ", closed on " + format_date(first.date));
      slot = poi_item(*closed);
      slot.claim = "hours";
    }
    if (planted(ConstraintId::TravelBlockOut)) {
      Item early = poi_item(pick_poi(origin_, first.date));
      early.claim = "blockout";
      record(ConstraintId::TravelBlockOut, 1, "inserted " + early.act.id + " before the morning departure");
      auto & items = first.block(Period::Morning)->items;
      items.insert(items.begin(), std::move(early));
    }
    if (planted(ConstraintId::ResponseFormat)) {
      first.title.clear();
      record(ConstraintId::ResponseFormat, 1, "blank scheduleTitle");
    }
    if (planted(ConstraintId::InformationVerification)) {
      Item * target = nullptr;
      if (days_.size() >= 2) {
        Block * evening = days_[days_.size() - 2].block(Period::Evening);
        if (evening != nullptr && !evening->items.empty()) target = &evening->items.front();
      }
      if (target == nullptr || !target->claim.empty()) target = free_poi(false);
      if (target == nullptr) unsupported(ConstraintId::InformationVerification, "no free entity to corrupt");
      const std::string fake = std::string(to_string(target->act.kind)) + "-unlisted-" + std::to_string(spec_.seed);
      record(ConstraintId::InformationVerification, day_of(target), "replaced id " + target->act.id + " with " + fake);
      target->act.id = fake;
      target->claim = "verification";
    }
    if (planted(ConstraintId::InformationAccuracy)) {
      Item * target = free_poi(false);
      if (target == nullptr) unsupported(ConstraintId::InformationAccuracy, "no free attraction to rename");
      target->act.name += " Annex";
      target->claim = "accuracy";
      record(ConstraintId::InformationAccuracy, day_of(target), "renamed " + target->act.id);
    }
    if (planted(ConstraintId::InformationRelevance)) {
      Item * target = free_poi(true);
      if (target == nullptr) unsupported(ConstraintId::InformationRelevance, "no free attraction to unlink");
      target->linked = false;
      target->claim = "relevance";
      record(ConstraintId::InformationRelevance, day_of(target), "unlinked " + target->link_name);
    }
    drop_empty_blocks();
  }

  Fixture finish()
  {
    Fixture f;
    f.spec = spec_;
    f.query = q_;
    f.catalog = catalog_;
    auto & it = f.itinerary;
    std::string dest_list;
    for (const auto & name : q_.destinations) dest_list += (dest_list.empty() ? "" : ", ") + name;
    it.name = std::to_string(spec_.duration_days) + "-day trip from " + q_.origin_city + " to " + dest_list;
    it.recommend_reason = "Unhurried sightseeing with short transfers and one hotel per stop.";
    for (const auto & d : days_) {
      DayPlan plan{d.index, d.title, {}};
      for (const auto & b : d.blocks) {
        PeriodBlock block{b.period, {}, {}, {}};
        for (const auto & item : b.items) {
          block.description += (block.description.empty() ? "" : " ") + sentence(item, catalog_);
          block.activities.push_back(item.act);
        }
        plan.blocks.push_back(std::move(block));
      }
      it.days.push_back(std::move(plan));
    }
    it.tips = Tips{"Travel tips", "Keep tickets at hand and check opening hours before leaving."};
    refresh_links(it);
    f.itinerary_text = serialize_itinerary(it);
    f.planted = records_;
    return f;
  }

  const FixtureSpec & spec_;
  const ReferenceCatalog & catalog_;
  SplitMix64 rng_;
  std::map<int, std::vector<const Poi *>> pois_by_city_;
  std::set<std::string> used_;
  Query q_;
  int origin_ = 0;
  int offset_ = 0;
  std::vector<int> stops_;
  std::vector<int> arrivals_;
  std::vector<Day> days_;
  std::vector<PlantRecord> records_;
};

}  // namespace

Date catalog_start_date() { return Date{std::chrono::year{2026} / 5 / 4}; }

ReferenceCatalog generate_catalog(std::uint64_t catalog_seed, int cities_count, int pois_per_city)
{
  if (cities_count < 2 || cities_count > kMaxFixtureCities) {
    throw PreconditionError("cities_count must lie in [2, " + std::to_string(kMaxFixtureCities) + "]");
  }
  if (pois_per_city < kMinPoisPerCity) {
    throw PreconditionError("pois_per_city must be at least " + std::to_string(kMinPoisPerCity));
  }
  SplitMix64 rng(catalog_seed ^ 0x5eedca7a1095eedULL);
  ReferenceCatalog cat;
  const Date first = catalog_start_date();
  const Date last = first + days{kCatalogSpanDays - 1};
  const Date mid = first + days{kCatalogSpanDays / 2 - 1};
  const auto window = [&rng](Date from, Date to) {
    const minutes open = hours{6 + static_cast<int>(rng.below(3))};
    const minutes close = hours{18 + 2 * static_cast<int>(rng.below(3))};
    return OpenWindow{from, to, open, close};
  };

  for (int c = 0; c < cities_count; ++c) {
    const std::string city = kCityNames[static_cast<std::size_t>(c)];
    for (int k = 0; k < pois_per_city; ++k) {
      Poi p;
      p.id = poi_id(c, k);
      p.name = city + " " + kPoiKinds[static_cast<std::size_t>(k) % kPoiKinds.size()];
      if (k >= static_cast<int>(kPoiKinds.size())) p.name += " " + std::to_string(k / kPoiKinds.size() + 1);
      p.city = city;
      p.location = jitter(rng, city_center(c));
      if (k == 0) {
        p.open_calendar = std::vector<OpenWindow>{window(first, mid)};  // first half only
      } else if (k == 1) {
        p.open_calendar = std::vector<OpenWindow>{window(mid + days{1}, last)};  // second half only
      } else if (!rng.chance(0.2)) {
        p.open_calendar = std::vector<OpenWindow>{window(first, last)};
      }
      const auto ntags = 1 + rng.below(2);
      for (std::uint64_t t = 0; t < ntags; ++t) p.tags.insert(kTags[rng.below(kTags.size())]);
      static constexpr std::array<double, 4> kDurations{1.0, 1.5, 2.0, 3.0};
      if (rng.chance(0.8)) p.recommended_duration_hours = kDurations[rng.below(kDurations.size())];
      p.effort = rng.chance(0.7) ? EffortClass::Other : static_cast<EffortClass>(rng.below(4));
      cat.pois.emplace(p.id, std::move(p));
    }
    for (int k = 0; k < static_cast<int>(kHotelStyles.size()); ++k) {
      Hotel h;
      h.id = hotel_id(c, k);
      h.name = city + " " + kHotelStyles[static_cast<std::size_t>(k)] + " Hotel";
      h.city = city;
      h.stars = 1 + static_cast<int>(rng.below(5));
      h.location = jitter(rng, city_center(c));
      cat.hotels.emplace(h.id, std::move(h));
    }
  }

  int number = 100;
  for (int day = 0; day < kCatalogSpanDays; ++day) {
    for (int from = 0; from < cities_count; ++from) {
      for (int to = 0; to < cities_count; ++to) {
        if (from == to) continue;
        for (std::size_t slot = 0; slot < kLegSlots.size(); ++slot) {
          TransportLeg l;
          l.id = leg_id(from, to, day, slot);
          l.mode = static_cast<TransportMode>(rng.below(3));  // train, flight, bus
          static constexpr std::array<const char *, 3> kPrefix{"G", "MU", "B"};
          l.number = std::string(kPrefix[static_cast<std::size_t>(l.mode)]) + std::to_string(number++);
          l.origin_city = kCityNames[static_cast<std::size_t>(from)];
          l.destination_city = kCityNames[static_cast<std::size_t>(to)];
          l.depart = DateTime{first + days{day}} + minutes{kLegSlots[slot]};
          l.arrive = l.depart + minutes{60 + 15 * static_cast<int>(rng.below(9))};
          cat.transports.emplace(l.id, std::move(l));
        }
      }
    }
  }
  return cat;
}

Fixture generate_fixture(const FixtureSpec & spec)
{
  if (spec.duration_days < 1 || spec.duration_days > kCatalogSpanDays) {
    throw PreconditionError("duration_days must lie in [1, " + std::to_string(kCatalogSpanDays) + "]");
  }
  const ReferenceCatalog catalog =
    generate_catalog(spec.effective_catalog_seed(), spec.cities_count, spec.pois_per_city);
  return Planner(spec, catalog).run();
}

Json fixture_spec_to_json(const FixtureSpec & spec)
{
  Json planted = Json::array();
  for (const auto id : spec.planted) planted.push_back(std::string(to_string(id)));
  return Json{{"citiesCount", spec.cities_count},
              {"poisPerCity", spec.pois_per_city},
              {"durationDays", spec.duration_days},
              {"seed", spec.seed},
              {"catalogSeed", spec.effective_catalog_seed()},
              {"split", std::string(to_string(spec.split))},
              {"plantedViolations", planted}};
}

FixtureSpec fixture_spec_from_json(const Json & j)
{
  if (!j.is_object()) throw SchemaError("$", "fixture spec must be an object");
  FixtureSpec s;
  const auto integer = [&j](const char * key, auto & out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw SchemaError(key, "expected an integer");
    out = j[key].get<std::remove_reference_t<decltype(out)>>();
  };
  integer("citiesCount", s.cities_count);
  integer("poisPerCity", s.pois_per_city);
  integer("durationDays", s.duration_days);
  integer("seed", s.seed);
  if (j.contains("catalogSeed")) {
    std::uint64_t c = 0;
    integer("catalogSeed", c);
    s.catalog_seed = c;
  }
  if (j.contains("split")) {
    const auto split = j["split"].is_string() ? parse_split(j["split"].get<std::string>()) : std::nullopt;
    if (!split) throw SchemaError("split", "expected \"synthetic\" or \"realWorld\"");
    s.split = *split;
  }
  if (j.contains("plantedViolations")) {
    if (!j["plantedViolations"].is_array()) throw SchemaError("plantedViolations", "expected an array");
    for (std::size_t i = 0; i < j["plantedViolations"].size(); ++i) {
      const auto & v = j["plantedViolations"][i];
      const auto id = v.is_string() ? parse_constraint_id(v.get<std::string>()) : std::nullopt;
      if (!id) throw SchemaError("plantedViolations[" + std::to_string(i) + "]", "unknown constraint id");
      s.planted.push_back(*id);
    }
  }
  return s;
}

Json manifest_to_json(const Fixture & f)
{
  Json planted = Json::array();
  for (const auto & p : f.planted) {
    planted.push_back(
      {{"constraintId", std::string(to_string(p.constraint))}, {"dayIndex", p.day_index}, {"detail", p.detail}});
  }
  return Json{{"queryId", f.query.query_id}, {"spec", fixture_spec_to_json(f.spec)}, {"planted", planted}};
}

}  // namespace tripscore
