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

#include "tripscore/reward.hpp"

#include "tripscore/errors.hpp"

namespace tripscore
{

std::optional<double> weighted_mean(const double * values, const double * weights, const bool * use, std::size_t n)
{
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (use != nullptr && !use[i]) continue;
    num += weights[i] * values[i];
    den += weights[i];
  }
  if (den <= 0.0) return std::nullopt;
  return num / den;
}

double soft_mean(const SoftVector & soft, const WeightConfig & weights)
{
  const auto v = soft.values();
  return weighted_mean(v.data(), weights.soft.data(), nullptr, v.size()).value_or(1.0);
}

double pref_mean(const PrefVector & pref, const WeightConfig & weights)
{
  if (pref.split == Split::RealWorld) return pref.user_request;
  return weighted_mean(pref.synthetic.data(), weights.pref_synthetic.data(), pref.applicable.data(),
                       pref.synthetic.size())
    .value_or(1.0);
}

double aggregate(int format_score, std::optional<int> commonsense_score, const std::optional<SoftVector> & soft,
                 const std::optional<PrefVector> & pref, const WeightConfig & weights)
{
  if (format_score == -3) {
    if (commonsense_score) throw InvalidGateState("commonsense score present although the format gate failed");
    return kFormatGatedReward;
  }
  if (format_score != 1) throw InvalidGateState("format score must be -3 or +1, got " + std::to_string(format_score));
  if (!commonsense_score) throw InvalidGateState("commonsense score missing for a plan that passed the format gate");
  if (*commonsense_score == -1) return kCommonsenseGatedReward;
  if (*commonsense_score != 1) {
    throw InvalidGateState("commonsense score must be -1 or +1, got " + std::to_string(*commonsense_score));
  }
  if (!soft || !pref) throw InvalidGateState("soft and preference scores are required for a plan passing both gates");
  return clean_reward(weights.soft_multiplier, soft_mean(*soft, weights), weights.pref_multiplier(pref->split),
                      pref_mean(*pref, weights));
}

double aggregate(const ScoreBreakdown & b, const WeightConfig & weights)
{
  return aggregate(b.format_score, b.commonsense_score, b.soft, b.pref, weights);
}

double pass_rate(const std::vector<bool> & passed)
{
  if (passed.empty()) throw EmptyCorpus();
  std::size_t n = 0;
  for (const bool p : passed) n += p;
  return static_cast<double>(n) / static_cast<double>(passed.size());
}

CorpusMetrics corpus_metrics(const std::vector<ScoreBreakdown> & breakdowns)
{
  if (breakdowns.empty()) throw EmptyCorpus();
  CorpusMetrics m;
  m.n = breakdowns.size();
  double sum = 0.0;
  double clean_sum = 0.0;
  for (const auto & b : breakdowns) {
    sum += b.reward;
    if (b.format_score != 1) continue;
    ++m.delivered;
    if (b.commonsense_score == 1) {
      ++m.commonsense_passed;
      clean_sum += b.reward;
    }
  }
  m.delivery_rate = static_cast<double>(m.delivered) / static_cast<double>(m.n);
  m.commonsense_pass_rate =
    m.delivered == 0 ? 0.0 : static_cast<double>(m.commonsense_passed) / static_cast<double>(m.delivered);
  m.mean_reward = sum / static_cast<double>(m.n);
  if (m.commonsense_passed > 0) m.cond_reward = clean_sum / static_cast<double>(m.commonsense_passed);
  return m;
}

CorpusMetrics corpus_metrics(const std::vector<ScoreBreakdown> & breakdowns, const WeightConfig & weights)
{
  std::vector<ScoreBreakdown> rescored = breakdowns;
  for (auto & b : rescored) b.reward = aggregate(b, weights);
  return corpus_metrics(rescored);
}

std::map<ConstraintId, std::size_t> violation_histogram(const std::vector<ScoreBreakdown> & breakdowns)
{
  std::map<ConstraintId, std::size_t> h;
  for (const auto & b : breakdowns) {
    for (const auto & v : b.violations) ++h[v.constraint];
  }
  return h;
}

}  // namespace tripscore
