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

#ifndef TRIPSCORE_TESTS__TEST_UTIL_HPP_
#define TRIPSCORE_TESTS__TEST_UTIL_HPP_

#include <set>
#include <string>
#include <vector>

#include "tripscore/calibrate.hpp"
#include "tripscore/evaluator.hpp"
#include "tripscore/fixtures.hpp"
#include "tripscore/model.hpp"
#include "tripscore/random.hpp"

namespace tripscore::testing
{

std::set<ConstraintId> constraint_ids(const std::vector<Violation> & violations);

ScoreBreakdown score_fixture(const Fixture & fixture, const EvalOptions & options = {});

// Small hand-built plans. Blocks get a description linking every activity.
Activity poi(const std::string & id, const std::string & name);
Activity external_poi(const std::string & name);
Activity hotel(const std::string & id, const std::string & name);
Activity leg(const std::string & id, const std::string & number);
PeriodBlock block(Period period, std::vector<Activity> activities);
DayPlan day(int index, std::vector<PeriodBlock> blocks);
Itinerary plan(std::vector<DayPlan> days);

Poi make_poi(const std::string & id, const std::string & name, const std::string & city, GeoPoint at,
             std::optional<double> hours = std::nullopt);
Hotel make_hotel(const std::string & id, const std::string & city, int stars, GeoPoint at);
TransportLeg make_leg(const std::string & id, const std::string & from, const std::string & to, const std::string & depart,
                      const std::string & arrive);

Date date(const std::string & text);
DateTime at(const std::string & text);

/// Independent, deliberately naive re-implementation of the five rule-based
/// soft components, used as an oracle.
struct SoftOracle
{
  double schedule;
  double hotel;
  double daytime;
  double unique;
  double clustering;
};
SoftOracle oracle_soft(const Itinerary & resolved, const ReferenceCatalog & catalog);

/// Random itinerary over a generated catalog: random blocks, random POIs,
/// repeats and legs, not necessarily feasible.
Itinerary fuzz_itinerary(std::uint64_t seed, const ReferenceCatalog & catalog);

// The golden plan (every rule sub-score 1) with a query whose stated
// preferences it fully meets.
struct GoldenCase
{
  std::string text;
  Query query;
  ReferenceCatalog catalog;
};
GoldenCase max_reward_case(Split split);

// Synthetic annotation pairs labeled by `theta`; with probability `noise`
// the label is replaced by a different one. `gated_share` of the pairs have
// one plan failing a gate.
std::vector<LabeledPair> planted_pairs(std::size_t n, const WeightConfig & theta, double noise,
                                       std::uint64_t seed, double gated_share = 0.0);
ScoreBreakdown random_clean_breakdown(SplitMix64 & rng, Split split = Split::Synthetic);

// Quadratic reference versions of the agreement statistics.
double brute_cohen_kappa(const std::vector<int> & a, const std::vector<int> & b);
double brute_fleiss_kappa(const std::vector<std::vector<std::size_t>> & counts);
double brute_tau_b(const std::vector<double> & x, const std::vector<double> & y);

}  // namespace tripscore::testing

#endif  // TRIPSCORE_TESTS__TEST_UTIL_HPP_
