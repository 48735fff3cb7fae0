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

#ifndef TRIPSCORE__FIXTURES_HPP_
#define TRIPSCORE__FIXTURES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripscore/io.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

// Generated catalogs cover this many consecutive days.
inline constexpr int kCatalogSpanDays = 14;
inline constexpr int kMaxFixtureCities = 8;
inline constexpr int kMinPoisPerCity = 6;

struct FixtureSpec
{
  int cities_count = 3;  // origin included, 2..8
  int pois_per_city = 8;
  int duration_days = 3;  // 1..14
  std::uint64_t seed = 0;
  // Fixtures sharing a catalog seed (and city/POI counts) share the catalog.
  std::optional<std::uint64_t> catalog_seed;
  std::vector<ConstraintId> planted;
  Split split = Split::Synthetic;

  std::uint64_t effective_catalog_seed() const { return catalog_seed.value_or(seed); }
};

struct PlantRecord
{
  ConstraintId constraint = ConstraintId::ResponseFormat;
  int day_index = 1;
  std::string detail;
};

struct Fixture
{
  FixtureSpec spec;
  Query query;
  ReferenceCatalog catalog;
  Itinerary itinerary;
  std::string itinerary_text;
  std::vector<PlantRecord> planted;
};

/// First day covered by generated catalogs.
Date catalog_start_date();

ReferenceCatalog generate_catalog(std::uint64_t catalog_seed, int cities_count, int pois_per_city);

/// Pure function of `spec`. Without plants the itinerary passes every format
/// and commonsense check; each plant is one mutation that trips exactly its
/// own constraint. Throws PreconditionError for out-of-range sizes and
/// UnsupportedViolation for plants that cannot be combined.
Fixture generate_fixture(const FixtureSpec & spec);

Json fixture_spec_to_json(const FixtureSpec & spec);
FixtureSpec fixture_spec_from_json(const Json & j);
/// Spec plus the list of planted violations.
Json manifest_to_json(const Fixture & fixture);

}  // namespace tripscore

#endif  // TRIPSCORE__FIXTURES_HPP_
