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
#include "tripscore/io.hpp"

namespace tripscore
{
namespace
{

using testing::constraint_ids;
using testing::score_fixture;

constexpr std::array<ConstraintId, 10> kAll{
  ConstraintId::ResponseFormat,      ConstraintId::InformationVerification, ConstraintId::InformationAccuracy,
  ConstraintId::InformationRelevance, ConstraintId::InformationCompleteness, ConstraintId::ChronologicalOrder,
  ConstraintId::LocationConsistency, ConstraintId::OperatingHours,          ConstraintId::TravelBlockOut,
  ConstraintId::TransportConsistency};

TEST(Fixtures, CleanFixturesPassBothGates)
{
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    FixtureSpec spec;
    spec.seed = seed;
    spec.cities_count = 2 + static_cast<int>(seed % 7);
    spec.duration_days = 1 + static_cast<int>(seed % 6);
    const auto fx = generate_fixture(spec);
    const auto b = score_fixture(fx);
    EXPECT_EQ(b.format_score, 1) << "seed " << seed;
    EXPECT_EQ(b.commonsense_score, 1) << "seed " << seed;
    EXPECT_TRUE(b.violations.empty()) << "seed " << seed << ": "
                                      << (b.violations.empty() ? "" : b.violations.front().detail);
  }
}

class PlantIsolation : public ::testing::TestWithParam<ConstraintId>
{
};

TEST_P(PlantIsolation, TripsExactlyItsOwnConstraint)
{
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FixtureSpec spec;
    spec.seed = 1000 + seed;
    spec.duration_days = 2 + static_cast<int>(seed % 4);
    spec.cities_count = 3 + static_cast<int>(seed % 3);
    spec.planted = {GetParam()};
    const auto fx = generate_fixture(spec);
    const auto b = score_fixture(fx);
    EXPECT_EQ(constraint_ids(b.violations), std::set<ConstraintId>{GetParam()})
      << "seed " << spec.seed << " first: " << (b.violations.empty() ? "none" : b.violations.front().detail);
    ASSERT_EQ(fx.planted.size(), 1u);
  }
}

INSTANTIATE_TEST_SUITE_P(AllIds, PlantIsolation, ::testing::ValuesIn(kAll),
                         [](const auto & info) { return std::string(to_string(info.param)); });

TEST(Fixtures, SameSpecIsByteIdentical)
{
  FixtureSpec spec;
  spec.seed = 77;
  spec.planted = {ConstraintId::OperatingHours};
  const auto a = generate_fixture(spec);
  const auto b = generate_fixture(spec);
  EXPECT_EQ(a.itinerary_text, b.itinerary_text);
  EXPECT_EQ(catalog_to_json(a.catalog).dump(), catalog_to_json(b.catalog).dump());
  EXPECT_EQ(query_to_json(a.query).dump(), query_to_json(b.query).dump());
  EXPECT_EQ(manifest_to_json(a).dump(), manifest_to_json(b).dump());
}

TEST(Fixtures, SharedCatalogSeedSharesCatalog)
{
  FixtureSpec a;
  a.seed = 1;
  a.catalog_seed = 9;
  FixtureSpec b = a;
  b.seed = 2;
  EXPECT_EQ(generate_fixture(a).catalog, generate_fixture(b).catalog);
}

TEST(Fixtures, ItineraryTextRoundTrips)
{
  FixtureSpec spec;
  spec.seed = 5;
  const auto fx = generate_fixture(spec);
  EXPECT_EQ(load_itinerary(fx.itinerary_text), fx.itinerary);
}

TEST(Fixtures, RejectsOutOfRangeSizes)
{
  FixtureSpec spec;
  spec.cities_count = 1;
  EXPECT_THROW(generate_fixture(spec), PreconditionError);
  spec.cities_count = 9;
  EXPECT_THROW(generate_fixture(spec), PreconditionError);
  spec.cities_count = 3;
  spec.duration_days = 0;
  EXPECT_THROW(generate_fixture(spec), PreconditionError);
}

TEST(Fixtures, SpecJsonRoundTrip)
{
  FixtureSpec spec;
  spec.seed = 42;
  spec.catalog_seed = 7;
  spec.split = Split::RealWorld;
  spec.planted = {ConstraintId::TravelBlockOut, ConstraintId::InformationAccuracy};
  const auto back = fixture_spec_from_json(fixture_spec_to_json(spec));
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.catalog_seed, 7u);
  EXPECT_EQ(back.split, Split::RealWorld);
  EXPECT_EQ(back.planted, spec.planted);
}

TEST(Fixtures, GeneratedCatalogHasExpectedShape)
{
  const auto cat = generate_catalog(3, 4, 6);
  EXPECT_EQ(cat.pois.size(), 24u);
  EXPECT_EQ(cat.hotels.size(), 12u);
  // every ordered pair, every day, four slots
  EXPECT_EQ(cat.transports.size(), 4u * 3u * kCatalogSpanDays * 4u);
}

}  // namespace
}  // namespace tripscore
