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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "test_util.hpp"
#include "tripscore/soft_scorer.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{
namespace
{

using namespace testing;
using testing::date;

class Soft : public ::testing::Test
{
protected:
  void SetUp() override
  {
    for (int i = 0; i < 12; ++i) {
      const std::string id = "P" + std::to_string(i);
      catalog_.pois[id] = make_poi(id, "Spot " + std::to_string(i), "B", {1, 1}, 1.0);
    }
    catalog_.pois["L3"] = make_poi("L3", "Long", "B", {1, 1}, 3.0);
    catalog_.pois["L2"] = make_poi("L2", "Mid", "B", {1, 1}, 2.0);
    catalog_.hotels["H1"] = make_hotel("H1", "B", 3, {1, 1});
    catalog_.hotels["H2"] = make_hotel("H2", "B", 3, {1.1, 1.1});
    catalog_.hotels["HC"] = make_hotel("HC", "C", 3, {1.2, 1.2});
    catalog_.transports["LONG"] = make_leg("LONG", "A", "B", "2026-06-02T08:00", "2026-06-02T17:00");
  }
  Itinerary resolved(const Itinerary & it) const
  {
    return resolve_activity_times(it, catalog_, date("2026-06-01")).itinerary;
  }
  ReferenceCatalog catalog_;
};

TEST_F(Soft, ScheduleDensityOneBadDayOfThree)
{
  const auto full = [] {
    return std::vector{block(Period::Morning, {poi("L3", "Long")}), block(Period::Afternoon, {poi("L2", "Mid")})};
  };
  auto it = plan({day(1, full()), day(2, full()), day(3, {block(Period::Morning, {poi("P1", "Spot 1")})})});
  EXPECT_NEAR(score_schedule_density(resolved(it)), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(score_schedule_density(resolved(it)), 0.6667, 1e-4);
  it.days.pop_back();
  EXPECT_EQ(score_schedule_density(resolved(it)), 1.0);
  auto empty = plan({day(1, {block(Period::Morning, {})}), day(2, {block(Period::Morning, {})})});
  EXPECT_EQ(score_schedule_density(resolved(empty)), 0.0);
}

TEST_F(Soft, HotelOneSwitchInFourNights)
{
  auto night = [](const char * id) { return std::vector{block(Period::Evening, {hotel(id, id)})}; };
  const auto it = plan({day(1, night("H1")), day(2, night("H1")), day(3, night("H2")), day(4, night("H2"))});
  EXPECT_EQ(score_hotel_consistency(it, catalog_), 0.75);
  const auto cross = plan({day(1, night("H1")), day(2, night("HC"))});
  EXPECT_EQ(score_hotel_consistency(cross, catalog_), 1.0);
  const auto none = plan({day(1, {block(Period::Morning, {poi("P1", "Spot 1")})})});
  EXPECT_EQ(score_hotel_consistency(none, catalog_), 1.0);
}

TEST_F(Soft, DaytimeEveningOnlyDay)
{
  const auto it = plan({day(1, {block(Period::Morning, {poi("P1", "Spot 1")})}),
                        day(2, {block(Period::Evening, {poi("P2", "Spot 2")})})});
  EXPECT_EQ(score_daytime_utilization(resolved(it)), 0.5);
  const auto both = plan({day(1, {block(Period::Morning, {poi("P1", "Spot 1")})}),
                          day(2, {block(Period::Morning, {poi("P2", "Spot 2")})})});
  EXPECT_EQ(score_daytime_utilization(resolved(both)), 1.0);
}

TEST_F(Soft, DaytimeTransportExemption)
{
  const auto it = plan({day(1, {block(Period::Morning, {poi("P1", "Spot 1")})}),
                        day(2, {block(Period::Morning, {leg("LONG", "NLONG")})})});
  EXPECT_EQ(score_daytime_utilization(resolved(it)), 1.0);
}

TEST_F(Soft, UniqueOneDuplicateInTen)
{
  std::vector<Activity> acts;
  for (int i = 1; i <= 9; ++i) acts.push_back(poi("P" + std::to_string(i), "x"));
  acts.push_back(poi("P1", "x"));
  const auto it = plan({day(1, {block(Period::Afternoon, acts)})});
  EXPECT_NEAR(score_unique_attractions(it), 0.895, 1e-9);
  acts.back() = poi("P10", "x");
  EXPECT_EQ(score_unique_attractions(plan({day(1, {block(Period::Afternoon, acts)})})), 1.0);
}

TEST_F(Soft, UniqueSameAttractionFourTimes)
{
  std::vector<DayPlan> days;
  for (int d = 1; d <= 4; ++d) days.push_back(day(d, {block(Period::Morning, {poi("P1", "x")})}));
  EXPECT_NEAR(score_unique_attractions(plan(days)), 0.6375, 1e-9);
}

TEST_F(Soft, UniqueMergesBackToBackRepeats)
{
  const auto it = plan({day(1, {block(Period::Morning, {poi("P1", "x"), poi("P1", "x"), poi("P2", "y")})})});
  EXPECT_EQ(score_unique_attractions(it), 1.0);
}

TEST_F(Soft, ClusteringTwoFarHopsOfTen)
{
  // eleven POIs on a meridian: eight short hops, two long
  const double gaps[] = {0.001, 0.002, 0.003, 0.004, 0.005, 0.006, 0.007, 0.008, 0.5, 0.6};
  double lat = 10.0;
  std::vector<Activity> acts;
  for (int i = 0; i <= 10; ++i) {
    const std::string id = "C" + std::to_string(i);
    catalog_.pois[id] = make_poi(id, id, "B", {lat, 20.0});
    acts.push_back(poi(id, id));
    if (i < 10) lat += gaps[i];
  }
  const auto it = plan({day(1, {block(Period::Afternoon, acts)})});
  EXPECT_NEAR(score_location_clustering(it, catalog_), 1.0 - 2.0 / 11.0, 1e-12);
  EXPECT_NEAR(score_location_clustering(it, catalog_), 0.8182, 1e-4);

  // shifting every point along the meridian barely changes distances
  auto shifted = catalog_;
  for (auto & [id, p] : shifted.pois) p.location.lat += 0.05;
  EXPECT_NEAR(score_location_clustering(it, shifted), score_location_clustering(it, catalog_), 1e-6);
}

TEST_F(Soft, ClusteringDegenerateCases)
{
  std::vector<Activity> same;
  for (int i = 0; i < 8; ++i) same.push_back(poi("P" + std::to_string(i), "x"));
  EXPECT_EQ(score_location_clustering(plan({day(1, {block(Period::Morning, same)})}), catalog_), 1.0);
  same.resize(4);  // three hops
  EXPECT_EQ(score_location_clustering(plan({day(1, {block(Period::Morning, same)})}), catalog_), 1.0);
}

TEST(SoftLikert, UnitScale)
{
  EXPECT_EQ(likert_to_unit(5), 1.0);
  EXPECT_EQ(likert_to_unit(1), 0.0);
  EXPECT_EQ(likert_to_unit(3), 0.5);
}

TEST(SoftLikert, RuleOnlyDefaults)
{
  const auto s = score_likert_subscores("plan", nullptr);
  EXPECT_EQ(s.iconic, 0.5);
  EXPECT_EQ(s.diversity, 0.5);
  EXPECT_EQ(s.source, ScoreSource::RuleOnlyDefault);
  const auto judge = constant_judge(5, 5);
  const auto j = score_likert_subscores("plan", judge.get());
  EXPECT_EQ(j.iconic, 1.0);
  EXPECT_EQ(j.source, ScoreSource::Judge);
}

TEST(SoftFuzz, MatchesBruteForceOracle)
{
  const auto catalog = generate_catalog(11, 4, 8);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto it = fuzz_itinerary(seed, catalog);
    const auto r = resolve_activity_times(it, catalog, catalog_start_date() + std::chrono::days{seed % 7}).itinerary;
    const auto v = score_soft_rules(r, catalog);
    const auto o = oracle_soft(r, catalog);
    ASSERT_NEAR(v.schedule, o.schedule, 1e-9) << "seed " << seed;
    ASSERT_NEAR(v.hotel, o.hotel, 1e-9) << "seed " << seed;
    ASSERT_NEAR(v.daytime, o.daytime, 1e-9) << "seed " << seed;
    ASSERT_NEAR(v.unique, o.unique, 1e-9) << "seed " << seed;
    ASSERT_NEAR(v.clustering, o.clustering, 1e-9) << "seed " << seed;
    for (const double x : v.values()) {
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
    }
  }
}

TEST(SoftFuzz, DuplicatingASingleVisitNeverRaisesUnique)
{
  const auto catalog = generate_catalog(12, 3, 8);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto it = fuzz_itinerary(seed, catalog);
    std::map<std::string, int> seen;
    for (const auto & d : it.days) {
      for (const auto & b : d.blocks) {
        for (const auto & a : b.activities) {
          if (a.kind == ActivityKind::Poi && !a.id.empty()) ++seen[a.id];
        }
      }
    }
    const auto once = std::find_if(seen.begin(), seen.end(), [](const auto & kv) { return kv.second == 1; });
    if (once == seen.end()) continue;
    const double before = score_unique_attractions(it);
    auto & tail = it.days.back().blocks.back().activities;
    tail.push_back(hotel("hotel-0-0", "h"));
    tail.push_back(poi(once->first, "x"));
    EXPECT_LE(score_unique_attractions(it), before) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace tripscore
