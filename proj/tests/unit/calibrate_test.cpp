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

#include <cmath>

#include "test_util.hpp"
#include "tripscore/calibrate.hpp"
#include "tripscore/errors.hpp"
#include "tripscore/reward.hpp"

namespace tripscore
{
namespace
{

using testing::planted_pairs;
using testing::random_clean_breakdown;

GridSpec small_grid() { return GridSpec{{0.1, 0.7}, {0.2, 1.0}, {0.8, 1.2}, {0.1, 1.4}}; }

// Every grid tuple in lexicographic order, scored with pair_agreement.
WeightConfig brute_best(const std::vector<LabeledPair> & pairs, const GridSpec & g, double & best_acc)
{
  const std::size_t d = 7 + 4 + 2;
  std::vector<std::size_t> idx(d, 0);
  const auto dim = [&](std::size_t k) -> const std::vector<double> & {
    if (k < 7) return g.w1;
    if (k < 11) return g.w2;
    return k == 11 ? g.w3 : g.w4;
  };
  best_acc = -1;
  WeightConfig best;
  while (true) {
    WeightConfig w;
    for (std::size_t k = 0; k < 7; ++k) w.soft[k] = g.w1[idx[k]];
    for (std::size_t k = 0; k < 4; ++k) w.pref_synthetic[k] = g.w2[idx[7 + k]];
    w.pref_real_world = 1.0;
    w.soft_multiplier = g.w3[idx[11]];
    w.pref_multiplier_synthetic = w.pref_multiplier_real_world = g.w4[idx[12]];
    const double acc = pair_agreement(w, pairs);
    if (acc > best_acc) {
      best_acc = acc;
      best = w;
    }
    std::size_t k = d;
    while (k > 0 && ++idx[k - 1] == dim(k - 1).size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return best;
}

TEST(Calibrate, DefaultGridSize)
{
  EXPECT_EQ(GridSpec::defaults().size(), 3720087u);
  EXPECT_THROW((GridSpec{{}, {1}, {1}, {1}}.validate()), DomainError);
  EXPECT_THROW((GridSpec{{-1}, {1}, {1}, {1}}.validate()), DomainError);
  const auto g = grid_from_json(grid_to_json(small_grid()));
  EXPECT_EQ(g.w4, small_grid().w4);
}

TEST(Calibrate, GridSearchMatchesEnumeration)
{
  WeightConfig theta = WeightConfig::optimized();
  theta.soft = {0.7, 0.1, 0.1, 0.7, 0.7, 0.1, 0.7};
  theta.pref_synthetic = {1.0, 0.2, 0.2, 1.0};
  theta.soft_multiplier = 1.2;
  theta.pref_multiplier_synthetic = 1.4;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto pairs = planted_pairs(40, theta, 0.1, seed, 0.1);
    double acc = 0;
    const auto expect = brute_best(pairs, small_grid(), acc);
    const auto got = grid_search(pairs, small_grid(), 1);
    EXPECT_EQ(got.best, expect);
    EXPECT_DOUBLE_EQ(got.accuracy, acc);
    EXPECT_GE(got.accuracy, pair_agreement(theta, pairs));
    EXPECT_EQ(grid_search(pairs, small_grid(), 3).best, got.best);
  }
}

TEST(Calibrate, TiesPickSmallestTuple)
{
  SplitMix64 rng(3);
  std::vector<LabeledPair> pairs;
  for (int i = 0; i < 12; ++i) {
    LabeledPair p;
    p.a = random_clean_breakdown(rng);
    p.b = p.a;
    p.label = Label::Neither;
    pairs.push_back(p);
  }
  const auto r = grid_search(pairs, small_grid());
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.best.soft[0], 0.1);
  EXPECT_EQ(r.best.soft[6], 0.1);
  EXPECT_EQ(r.best.pref_synthetic[3], 0.2);
  EXPECT_EQ(r.best.soft_multiplier, 0.8);
  EXPECT_EQ(r.best.pref_multiplier_synthetic, 0.1);
}

TEST(Calibrate, DegenerateInputs)
{
  EXPECT_THROW(grid_search({}, small_grid()), NoPairs);
  EXPECT_THROW(pair_agreement(WeightConfig::optimized(), {}), NoPairs);

  SplitMix64 rng(8);
  LabeledPair p;
  p.a = random_clean_breakdown(rng);
  p.b = random_clean_breakdown(rng);
  p.label = Label::A;
  std::vector<LabeledPair> repeated(10, p);
  const double acc = grid_search(repeated, small_grid()).accuracy;
  EXPECT_TRUE(acc == 0.0 || acc == 1.0);

  // a dominates b, so no weight makes them tie
  for (auto & q : repeated) {
    q.b.soft = SoftVector{0, 0, 0, 0, 0, 0, 0};
    q.a.soft = SoftVector{1, 1, 1, 1, 1, 1, 1};
    q.label = Label::Neither;
  }
  EXPECT_EQ(grid_search(repeated, small_grid()).accuracy, 0.0);
}

TEST(Calibrate, PairAgreementTrivial)
{
  const auto theta = WeightConfig::optimized();
  auto pairs = planted_pairs(50, theta, 0.0, 4, 0.2);
  EXPECT_EQ(pair_agreement(theta, pairs), 1.0);
  for (auto & p : pairs) std::swap(p.a, p.b);
  EXPECT_EQ(pair_agreement(theta, pairs), 0.0);
}

TEST(Calibrate, CrossValidationSeparable)
{
  SplitMix64 rng(12);
  std::vector<LabeledPair> pairs;
  for (int i = 0; i < 40; ++i) {
    LabeledPair p;
    p.a = random_clean_breakdown(rng);
    p.b = p.a;
    auto & worse = i % 2 ? p.a : p.b;
    worse.soft = SoftVector{0, 0, 0, 0, 0, 0, 0};
    worse.pref->synthetic = {0, 0, 0, 0};
    auto & better = i % 2 ? p.b : p.a;
    better.soft->schedule = 1.0;
    p.label = i % 2 ? Label::B : Label::A;
    pairs.push_back(p);
  }
  const auto cv = cross_validate(pairs, small_grid(), 5, 9);
  ASSERT_EQ(cv.fold_accuracies.size(), 5u);
  for (double a : cv.fold_accuracies) EXPECT_EQ(a, 1.0);
  EXPECT_EQ(cv.mean, 1.0);
  EXPECT_EQ(cv.stddev, 0.0);
}

TEST(Calibrate, CrossValidationShuffledLabels)
{
  auto pairs = planted_pairs(200, WeightConfig::optimized(), 0.0, 21);
  SplitMix64 rng(77);
  for (auto & p : pairs) p.label = rng.chance(0.5) ? Label::A : Label::B;
  const auto cv = cross_validate(pairs, small_grid(), 5, 1);
  EXPECT_NEAR(cv.mean, 0.5, 0.1);
  const auto again = cross_validate(pairs, small_grid(), 5, 1);
  EXPECT_EQ(again.fold_accuracies, cv.fold_accuracies);
}

TEST(Calibrate, CrossValidationErrors)
{
  const auto pairs = planted_pairs(4, WeightConfig::optimized(), 0.0, 1);
  EXPECT_THROW(cross_validate(pairs, small_grid(), 5, 0), TooFewPairs);
  EXPECT_THROW(cross_validate(pairs, small_grid(), 1, 0), DomainError);
}

TEST(Calibrate, Bootstrap)
{
  const auto theta = WeightConfig::optimized();
  const auto perfect = planted_pairs(30, theta, 0.0, 2);
  const auto ci = bootstrap_ci(perfect, theta, 200, 0.95, 1);
  EXPECT_EQ(ci.low, 1.0);
  EXPECT_EQ(ci.high, 1.0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto noisy = planted_pairs(100, theta, 0.3, seed);
    const double point = pair_agreement(theta, noisy);
    const auto c = bootstrap_ci(noisy, theta, 500, 0.95, seed);
    EXPECT_LE(c.low, point);
    EXPECT_GE(c.high, point);
    const auto d = bootstrap_ci(noisy, theta, 500, 0.95, seed);
    EXPECT_EQ(c.low, d.low);
  }
  const auto small = planted_pairs(100, theta, 0.3, 5);
  const auto large = planted_pairs(10000, theta, 0.3, 5);
  const auto cs = bootstrap_ci(small, theta, 300, 0.95, 3);
  const auto cl = bootstrap_ci(large, theta, 300, 0.95, 3);
  EXPECT_LT(cl.high - cl.low, 0.5 * (cs.high - cs.low));
  EXPECT_THROW(bootstrap_ci(small, theta, 0, 0.95, 1), DomainError);
  EXPECT_THROW(bootstrap_ci(small, theta, 10, 1.0, 1), DomainError);
}

TEST(Calibrate, SensitivitySweep)
{
  const auto theta = WeightConfig::optimized();
  const auto pairs = planted_pairs(100, theta, 0.0, 6);
  const auto rows = sensitivity_sweep(pairs, {}, theta);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].variant, "baseline");
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(rows[i].train_accuracy, 1.0) << rows[i].variant;  // scaling keeps winners
  }
  const auto & t1 = rows[6];
  EXPECT_EQ(t1.variant, "simplex T=1");
  for (const auto & p : pairs) EXPECT_NEAR(aggregate(p.a, t1.weights), aggregate(p.a, theta), 1e-12);
  EXPECT_FALSE(rows[0].validation_accuracy.has_value());
}

TEST(Calibrate, RecoversPlantedTheta)
{
  WeightConfig theta;
  theta.soft = {0.7, 0.1, 0.7, 0.1, 0.7, 0.1, 0.1};
  theta.pref_synthetic = {0.2, 1.0, 0.2, 1.0};
  theta.pref_real_world = 1.0;
  theta.soft_multiplier = 0.8;
  theta.pref_multiplier_synthetic = theta.pref_multiplier_real_world = 1.4;
  const auto pairs = planted_pairs(150, theta, 0.1, 17);
  CalibrationOptions opt;
  opt.grid = small_grid();
  opt.bootstrap_iterations = 100;
  const auto r = calibrate(pairs, opt);
  const double planted = pair_agreement(theta, pairs);
  EXPECT_GE(r.train_accuracy, planted);
  EXPECT_LE(r.train_accuracy - planted, 0.05);
  EXPECT_EQ(r.pairs, 150u);
  EXPECT_LE(r.bootstrap.low, r.train_accuracy);
  EXPECT_GT(r.kendall_tau, 0.5);
  const auto j = calibration_to_json(r);
  EXPECT_TRUE(j.contains("trainAccuracy"));
}

TEST(Calibrate, LabeledPairsUseMajority)
{
  AnnotationPair keep;
  keep.pair_id = "k";
  keep.rater_labels = {Label::A, Label::A, Label::Neither};
  SplitMix64 rng(1);
  keep.scores_a = random_clean_breakdown(rng);
  keep.scores_b = random_clean_breakdown(rng);
  AnnotationPair split = keep;
  split.rater_labels = {Label::A, Label::B, Label::Neither};
  AnnotationPair unscored = keep;
  unscored.scores_b.reset();
  const auto out = labeled_pairs({keep, split, unscored});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].label, Label::A);
}

}  // namespace
}  // namespace tripscore
