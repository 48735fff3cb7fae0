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

#include "test_util.hpp"
#include "tripscore/commonsense_checker.hpp"
#include "tripscore/errors.hpp"
#include "tripscore/format_checker.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{
namespace
{

using namespace testing;
using testing::constraint_ids;
using testing::date;

OpenWindow window(const char * from, const char * to, int open_h, int close_h)
{
  return {date(from), date(to), std::chrono::hours{open_h}, std::chrono::hours{close_h}};
}

class Commonsense : public ::testing::Test
{
protected:
  void SetUp() override
  {
    auto & c = catalog_;
    c.transports["T1"] = make_leg("T1", "A", "B", "2026-06-01T09:10", "2026-06-01T12:40");
    c.transports["T2"] = make_leg("T2", "B", "C", "2026-06-02T13:00", "2026-06-02T14:00");
    c.transports["T3"] = make_leg("T3", "C", "A", "2026-06-03T19:00", "2026-06-03T20:00");
    c.transports["T4"] = make_leg("T4", "C", "D", "2026-06-02T13:00", "2026-06-02T14:00");
    c.transports["T5"] = make_leg("T5", "A", "B", "2026-06-03T19:00", "2026-06-03T20:00");
    c.transports["T6"] = make_leg("T6", "B", "A", "2026-06-02T13:00", "2026-06-02T14:00");
    c.transports["T7"] = make_leg("T7", "B", "A", "2026-06-03T19:00", "2026-06-03T20:00");
    c.pois["PB1"] = make_poi("PB1", "B Museum", "B", {1, 1}, 2.0);
    c.pois["PB2"] = make_poi("PB2", "B Park", "B", {1, 1.01}, 2.0);
    c.pois["PB3"] = make_poi("PB3", "B Hall", "B", {1, 1.02}, 2.0);
    c.pois["PC1"] = make_poi("PC1", "C Tower", "C", {2, 2}, 3.0);
    c.pois["PB1"].open_calendar = std::vector{window("2026-06-01", "2026-06-30", 8, 18)};
    c.pois["PB2"].open_calendar = std::vector{window("2026-06-01", "2026-06-30", 8, 18)};
    c.hotels["HB"] = make_hotel("HB", "B", 3, {1, 1});
    c.hotels["HC"] = make_hotel("HC", "C", 3, {2, 2});
    query_.query_id = "q";
    query_.origin_city = "A";
    query_.destinations = {"B"};
    query_.start_date = date("2026-06-01");
    query_.duration_days = 3;
  }

  Itinerary resolved(const Itinerary & it) const
  {
    return resolve_activity_times(it, catalog_, query_.start_date).itinerary;
  }

  ReferenceCatalog catalog_;
  Query query_;
};

// A clean A -> B -> A round trip.
Itinerary round_trip()
{
  return plan({day(1, {block(Period::Morning, {leg("T1", "NT1")}),
                       block(Period::Afternoon, {poi("PB1", "B Museum")}),
                       block(Period::Evening, {hotel("HB", "B Hotel HB")})}),
               day(2, {block(Period::Morning, {poi("PB2", "B Park")}),
                       block(Period::Afternoon, {poi("PB3", "B Hall")}),
                       block(Period::Evening, {hotel("HB", "B Hotel HB")})}),
               day(3, {block(Period::Morning, {poi("PB1", "B Museum")}),
                       block(Period::Evening, {leg("T7", "NT7")})})});
}

TEST_F(Commonsense, CleanRoundTripPasses)
{
  const auto it = round_trip();
  const auto [score, report] = evaluate_commonsense({true, {}}, it, query_, catalog_);
  EXPECT_EQ(score, kCommonsensePass);
  EXPECT_TRUE(report.violations.empty()) << report.violations.front().detail;
}

TEST_F(Commonsense, MissingHotelOnSingleCityTrip)
{
  query_.origin_city = "B";
  auto it = round_trip();
  it.days[0].blocks.erase(it.days[0].blocks.begin());  // no legs needed
  it.days[2].blocks.pop_back();
  it.days[1].blocks.pop_back();  // night 2 without hotel
  const auto v = check_completeness(it, query_, catalog_);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].day_index, 2);
}

TEST_F(Commonsense, MissingReturnLeg)
{
  auto it = round_trip();
  it.days[2].blocks.pop_back();
  EXPECT_EQ(constraint_ids(check_completeness(it, query_, catalog_)), std::set{ConstraintId::InformationCompleteness});
  EXPECT_TRUE(check_completeness(round_trip(), query_, catalog_).empty());
}

TEST_F(Commonsense, OutOfOrderStartTimes)
{
  // afternoon POI, then a leg departing 09:10 listed after it
  auto it = plan({day(1, {block(Period::Afternoon, {poi("PB1", "B Museum"), leg("T1", "NT1")})})});
  EXPECT_FALSE(check_chronology(resolved(it), query_.start_date).empty());
  EXPECT_TRUE(check_chronology(resolved(round_trip()), query_.start_date).empty());
}

TEST_F(Commonsense, MorningFlightInEveningBlock)
{
  auto it = plan({day(1, {block(Period::Evening, {leg("T1", "NT1")})})});
  const auto v = check_chronology(resolved(it), query_.start_date);
  EXPECT_EQ(constraint_ids(v), std::set{ConstraintId::ChronologicalOrder});
}

TEST_F(Commonsense, PoiBeforeArrivalLeg)
{
  auto it = round_trip();
  it.days[0].blocks.insert(it.days[0].blocks.begin(), block(Period::Morning, {poi("PB2", "B Park")}));
  it.days[0].blocks[1].period = Period::Morning;
  EXPECT_EQ(check_location_consistency(it, query_, catalog_).size(), 1u);
  EXPECT_TRUE(check_location_consistency(round_trip(), query_, catalog_).empty());
}

TEST_F(Commonsense, LegFromAnotherCity)
{
  auto it = round_trip();
  it.days[2].blocks[1].activities[0] = leg("T3", "NT3");  // departs C while in B
  EXPECT_FALSE(check_location_consistency(it, query_, catalog_).empty());
  EXPECT_FALSE(check_transport_consistency(it, query_, catalog_).empty());
}

TEST_F(Commonsense, VisitAfterClosing)
{
  auto it = round_trip();
  it.days[1].blocks[2].activities.insert(it.days[1].blocks[2].activities.begin(), poi("PB2", "B Park"));
  const auto v = check_operating_hours(resolved(it), catalog_);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].constraint, ConstraintId::OperatingHours);
  EXPECT_TRUE(check_operating_hours(resolved(round_trip()), catalog_).empty());
}

TEST_F(Commonsense, UnknownCalendarNeverViolates)
{
  auto it = round_trip();
  it.days[1].blocks[2].activities.insert(it.days[1].blocks[2].activities.begin(), poi("PB3", "B Hall"));
  EXPECT_TRUE(check_operating_hours(resolved(it), catalog_).empty());
}

TEST_F(Commonsense, ActivityDuringFlight)
{
  catalog_.pois["PA"] = make_poi("PA", "A Hall", "A", {0, 0}, 3.0);
  auto it = plan({day(1, {block(Period::Morning, {poi("PA", "A Hall"), leg("T1", "NT1")})})});
  const auto v = check_travel_blockout(resolved(it));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].constraint, ConstraintId::TravelBlockOut);
}

TEST_F(Commonsense, EndingAtDepartureIsFine)
{
  catalog_.transports["T8"] = make_leg("T8", "A", "B", "2026-06-01T10:00", "2026-06-01T11:00");
  catalog_.pois["PA"] = make_poi("PA", "A Hall", "A", {0, 0}, 2.0);
  auto it = plan({day(1, {block(Period::Morning, {poi("PA", "A Hall"), leg("T8", "NT8")})})});
  EXPECT_TRUE(check_travel_blockout(resolved(it)).empty());
  auto no_leg = plan({day(1, {block(Period::Morning, {poi("PA", "A Hall")})})});
  EXPECT_TRUE(check_travel_blockout(resolved(no_leg)).empty());
}

TEST_F(Commonsense, EarlyDepartureForbidsEarlierActivity)
{
  catalog_.transports["T9"] = make_leg("T9", "A", "B", "2026-06-01T11:00", "2026-06-01T12:00");
  catalog_.pois["PA"] = make_poi("PA", "A Hall", "A", {0, 0}, 1.0);
  // 08:00-09:00 visit, 09:10 departure: no overlap but departure is before 10:00
  auto it = plan({day(1, {block(Period::Morning, {poi("PA", "A Hall"), leg("T1", "NT1")})})});
  EXPECT_EQ(check_travel_blockout(resolved(it)).size(), 1u);
  // same visit before an 11:00 departure is fine
  auto late = plan({day(1, {block(Period::Morning, {poi("PA", "A Hall"), leg("T9", "NT9")})})});
  EXPECT_TRUE(check_travel_blockout(resolved(late)).empty());
}

Itinerary legs_only(std::vector<std::string> ids)
{
  std::vector<DayPlan> days;
  int d = 1;
  for (const auto & id : ids) days.push_back(day(d++, {block(Period::Afternoon, {leg(id, "N" + id)})}));
  return plan(std::move(days));
}

TEST_F(Commonsense, TransportJump)
{
  query_.destinations = {"B", "C"};
  EXPECT_FALSE(check_transport_consistency(legs_only({"T1", "T4"}), query_, catalog_).empty());
}

TEST_F(Commonsense, TransportWalkInOrder)
{
  query_.destinations = {"B", "C"};
  EXPECT_TRUE(check_transport_consistency(legs_only({"T1", "T2", "T3"}), query_, catalog_).empty());
}

TEST_F(Commonsense, TransportRepeatedRoute)
{
  EXPECT_FALSE(check_transport_consistency(legs_only({"T1", "T6", "T5"}), query_, catalog_).empty());
}

TEST_F(Commonsense, RequiresPassedFormat)
{
  EXPECT_THROW(evaluate_commonsense({false, {}}, round_trip(), query_, catalog_), PreconditionError);
}

TEST_F(Commonsense, PermutingActivitiesFlipsChronology)
{
  auto it = round_trip();
  EXPECT_TRUE(check_chronology(resolved(it), query_.start_date).empty());
  std::swap(it.days[0].blocks[0], it.days[0].blocks[1]);
  std::swap(it.days[0].blocks[0].period, it.days[0].blocks[1].period);
  EXPECT_FALSE(check_chronology(resolved(it), query_.start_date).empty());
}

TEST(CommonsenseFixtures, AllSixPlantedFail)
{
  FixtureSpec spec;
  spec.seed = 4;
  spec.duration_days = 3;
  spec.cities_count = 4;
  spec.planted = {kCommonsenseConstraints.begin(), kCommonsenseConstraints.end()};
  const auto fx = generate_fixture(spec);
  const auto b = score_fixture(fx);
  EXPECT_EQ(b.commonsense_score, kCommonsenseFail);
  EXPECT_GE(b.violations.size(), 6u);
  EXPECT_EQ(constraint_ids(b.violations), std::set<ConstraintId>(spec.planted.begin(), spec.planted.end()));
  EXPECT_EQ(b.reward, 0.0);
}

TEST(CommonsenseFixtures, SeedSevenIsClean)
{
  FixtureSpec spec;
  spec.seed = 7;
  const auto b = score_fixture(generate_fixture(spec));
  EXPECT_EQ(b.format_score, 1);
  EXPECT_EQ(b.commonsense_score, 1);
}

TEST(CommonsenseFixtures, OperatingHoursPlantGivesOneViolation)
{
  FixtureSpec spec;
  spec.seed = 7;
  spec.planted = {ConstraintId::OperatingHours};
  const auto b = score_fixture(generate_fixture(spec));
  ASSERT_EQ(b.violations.size(), 1u);
  EXPECT_EQ(b.violations[0].constraint, ConstraintId::OperatingHours);
}

}  // namespace
}  // namespace tripscore
