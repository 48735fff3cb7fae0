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

#ifndef TRIPSCORE__REWARD_HPP_
#define TRIPSCORE__REWARD_HPP_

#include <map>
#include <optional>
#include <vector>

#include "tripscore/model.hpp"

namespace tripscore
{

inline constexpr double kFormatGatedReward = -3.0;
inline constexpr double kCommonsenseGatedReward = 0.0;

/// Sum(w * x) / Sum(w) over the entries with `use` set; nullopt when none.
std::optional<double> weighted_mean(const double * values, const double * weights, const bool * use, std::size_t n);

/// Mean of the soft vector under w1.
double soft_mean(const SoftVector & soft, const WeightConfig & weights);
/// Mean of the applicable preference components under the split's w2. A
/// synthetic vector with nothing applicable scores 1.
double pref_mean(const PrefVector & pref, const WeightConfig & weights);

/// Reward of a plan that passed both gates.
inline double clean_reward(double soft_multiplier, double soft_mean_value, double pref_multiplier,
                           double pref_mean_value)
{
  double r = 2.0;
  r += soft_multiplier * soft_mean_value;
  r += pref_multiplier * pref_mean_value;
  return r;
}

/// Gated aggregation: -3 on a failed format gate, 0 on a failed commonsense
/// gate, otherwise 2 + w3 * soft mean + w4 * preference mean.
/// Throws InvalidGateState for inconsistent gate inputs.
double aggregate(int format_score, std::optional<int> commonsense_score, const std::optional<SoftVector> & soft,
                 const std::optional<PrefVector> & pref, const WeightConfig & weights);
double aggregate(const ScoreBreakdown & breakdown, const WeightConfig & weights);

/// Share of passed reports. Throws EmptyCorpus.
double pass_rate(const std::vector<bool> & passed);
template <class Report>
double pass_rate(const std::vector<Report> & reports)
{
  std::vector<bool> passed;
  passed.reserve(reports.size());
  for (const auto & r : reports) passed.push_back(r.passed);
  return pass_rate(passed);
}

struct CorpusMetrics
{
  std::size_t n = 0;
  std::size_t delivered = 0;           // passed the format gate
  std::size_t commonsense_passed = 0;  // delivered and passed commonsense
  double delivery_rate = 0.0;
  double commonsense_pass_rate = 0.0;  // among delivered; 0 when none delivered
  double mean_reward = 0.0;
  std::optional<double> cond_reward;   // mean over fully passing plans
};

/// Uses each breakdown's stored reward. Throws EmptyCorpus.
CorpusMetrics corpus_metrics(const std::vector<ScoreBreakdown> & breakdowns);
/// Recomputes every reward under `weights` first.
CorpusMetrics corpus_metrics(const std::vector<ScoreBreakdown> & breakdowns, const WeightConfig & weights);

/// Violation counts per constraint id.
std::map<ConstraintId, std::size_t> violation_histogram(const std::vector<ScoreBreakdown> & breakdowns);

}  // namespace tripscore

#endif  // TRIPSCORE__REWARD_HPP_
