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
#include "tripscore/errors.hpp"
#include "tripscore/reward.hpp"

namespace tripscore
{
namespace
{

SoftVector all_soft(double v)
{
  SoftVector s;
  s.schedule = s.hotel = s.daytime = s.unique = s.clustering = s.iconic = s.diversity = v;
  return s;
}

PrefVector all_pref(Split split, double v)
{
  PrefVector p;
  p.split = split;
  p.synthetic = {v, v, v, v};
  p.applicable = {true, true, true, true};
  p.user_request = v;
  return p;
}

TEST(Reward, Gates)
{
  const auto w = WeightConfig::optimized();
  EXPECT_EQ(aggregate(-3, std::nullopt, std::nullopt, std::nullopt, w), -3.0);
  EXPECT_EQ(aggregate(1, -1, all_soft(1), all_pref(Split::Synthetic, 1), w), 0.0);
  EXPECT_EQ(aggregate(1, 1, all_soft(1), all_pref(Split::Synthetic, 1), w), 3.1);
  EXPECT_EQ(aggregate(1, 1, all_soft(1), all_pref(Split::RealWorld, 1), w), 4.4);
  EXPECT_EQ(aggregate(1, 1, all_soft(0), all_pref(Split::Synthetic, 0), w), 2.0);
}

TEST(Reward, InvalidGateState)
{
  const auto w = WeightConfig::optimized();
  EXPECT_THROW(aggregate(0, 1, all_soft(1), all_pref(Split::Synthetic, 1), w), InvalidGateState);
  EXPECT_THROW(aggregate(1, std::nullopt, all_soft(1), all_pref(Split::Synthetic, 1), w), InvalidGateState);
  EXPECT_THROW(aggregate(1, 1, std::nullopt, all_pref(Split::Synthetic, 1), w), InvalidGateState);
}

TEST(Reward, WeightedMeansIgnoreAbsentPreferences)
{
  const auto w = WeightConfig::optimized();
  PrefVector p;
  p.synthetic = {0.0, 0.5, 1.0, 0.0};
  p.applicable = {false, true, false, false};
  EXPECT_EQ(pref_mean(p, w), 0.5);
  p.applicable = {false, false, false, false};
  EXPECT_EQ(pref_mean(p, w), 1.0);
  SoftVector s = all_soft(1.0);
  s.schedule = 0.0;
  double total = 0;
  for (double x : w.soft) total += x;
  EXPECT_NEAR(soft_mean(s, w), 1.0 - w.soft[0] / total, 1e-15);
}

TEST(Reward, ScaleInvariance)
{
  auto w = WeightConfig::optimized();
  SoftVector s;
  s.schedule = 0.3;
  s.hotel = 0.9;
  s.daytime = 0.1;
  s.unique = 0.77;
  s.clustering = 0.5;
  PrefVector p = all_pref(Split::Synthetic, 0.4);
  p.synthetic[2] = 0.9;
  const double base = aggregate(1, 1, s, p, w);
  for (double & x : w.soft) x *= 3.7;
  for (double & x : w.pref_synthetic) x *= 0.21;
  EXPECT_NEAR(aggregate(1, 1, s, p, w), base, 1e-12);
}

TEST(Reward, Monotone)
{
  const auto w = WeightConfig::optimized();
  SoftVector s = all_soft(0.5);
  const auto p = all_pref(Split::Synthetic, 0.5);
  const double before = aggregate(1, 1, s, p, w);
  s.unique = 0.6;
  EXPECT_GT(aggregate(1, 1, s, p, w), before);
}

TEST(Reward, PassRate)
{
  EXPECT_EQ(pass_rate({true, true, true, false}), 0.75);
  EXPECT_EQ(pass_rate({true, true}), 1.0);
  EXPECT_EQ(pass_rate({false}), 0.0);
  EXPECT_THROW(pass_rate(std::vector<bool>{}), EmptyCorpus);
}

ScoreBreakdown gated_format()
{
  ScoreBreakdown b;
  b.format_score = -3;
  b.reward = -3;
  return b;
}

ScoreBreakdown clean(double reward)
{
  ScoreBreakdown b;
  b.format_score = 1;
  b.commonsense_score = 1;
  b.soft = all_soft(1);
  b.pref = all_pref(Split::Synthetic, 1);
  b.reward = reward;
  return b;
}

TEST(Reward, CorpusMetrics)
{
  const auto m = corpus_metrics({gated_format(), clean(3.1)});
  EXPECT_NEAR(m.mean_reward, 0.05, 1e-15);
  EXPECT_EQ(m.cond_reward, 3.1);
  EXPECT_EQ(m.delivery_rate, 0.5);
  EXPECT_EQ(m.commonsense_pass_rate, 1.0);

  ScoreBreakdown zero = clean(0);
  zero.commonsense_score = -1;
  EXPECT_FALSE(corpus_metrics({zero, zero}).cond_reward.has_value());

  const auto one = corpus_metrics({clean(3.1)});
  EXPECT_EQ(one.delivery_rate, 1.0);
  EXPECT_EQ(one.commonsense_pass_rate, 1.0);
  EXPECT_EQ(one.cond_reward, one.mean_reward);
  EXPECT_THROW(corpus_metrics({}), EmptyCorpus);

  // recomputed from sub-scores
  const auto re = corpus_metrics({gated_format(), clean(0.0)}, WeightConfig::optimized());
  EXPECT_EQ(re.cond_reward, 3.1);
}

TEST(Reward, HistogramConserves)
{
  ScoreBreakdown a = gated_format();
  a.violations = {{ConstraintId::ResponseFormat, std::nullopt, ""}, {ConstraintId::InformationAccuracy, 1, ""}};
  ScoreBreakdown b = clean(0);
  b.commonsense_score = -1;
  b.violations = {{ConstraintId::OperatingHours, 2, ""}, {ConstraintId::OperatingHours, 3, ""}};
  const auto h = violation_histogram({a, b});
  std::size_t total = 0;
  for (const auto & [id, n] : h) total += n;
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(h.at(ConstraintId::OperatingHours), 2u);
}

}  // namespace
}  // namespace tripscore
