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

#include "tripscore/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "tripscore/errors.hpp"
#include "tripscore/reward.hpp"
#include "tripscore/stats.hpp"

namespace tripscore
{
namespace
{

std::size_t ipow(std::size_t base, std::size_t exp)
{
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Digits of `index` in base |values|, most significant first.
template <std::size_t N>
std::array<double, N> tuple_at(const std::vector<double> & values, std::size_t index)
{
  std::array<double, N> out{};
  for (std::size_t j = N; j-- > 0;) {
    out[j] = values[index % values.size()];
    index /= values.size();
  }
  return out;
}

bool passes_both_gates(const ScoreBreakdown & b) { return b.format_score == 1 && b.commonsense_score == 1; }

int sign_of(Label l) { return label_sign(l); }

WeightConfig weights_at(const GridSpec & g, std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4)
{
  WeightConfig w;
  w.soft = tuple_at<kSoftComponents>(g.w1, i1);
  w.pref_synthetic = tuple_at<kSyntheticPrefComponents>(g.w2, i2);
  w.pref_real_world = 1.0;
  w.soft_multiplier = g.w3[i3];
  w.pref_multiplier_synthetic = g.w4[i4];
  w.pref_multiplier_real_world = g.w4[i4];
  return w;
}

struct Best
{
  std::size_t correct = 0;
  std::size_t index = SIZE_MAX;  // lexicographic grid index

  void offer(std::size_t c, std::size_t idx)
  {
    if (index == SIZE_MAX || c > correct || (c == correct && idx < index)) {
      correct = c;
      index = idx;
    }
  }
};

double quantile_sorted(const std::vector<double> & v, double q)
{
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return v[lo] + (v[hi] - v[lo]) * frac;
}

template <class T>
void shuffle(std::vector<T> & v, SplitMix64 & rng)
{
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

GridSpec GridSpec::defaults()
{
  return {{0.1, 0.4, 0.7}, {0.2, 0.6, 1.0}, {0.8, 1.0, 1.2}, {0.1, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4}};
}

void GridSpec::validate() const
{
  for (const auto * g : {&w1, &w2, &w3, &w4}) {
    if (g->empty()) throw DomainError("grid dimensions must be non-empty");
    for (const double v : *g) {
      if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("grid values must be positive");
    }
  }
}

std::size_t GridSpec::size() const
{
  return ipow(w1.size(), kSoftComponents) * ipow(w2.size(), kSyntheticPrefComponents) * w3.size() * w4.size();
}

GridSpec grid_from_json(const Json & j)
{
  GridSpec g = GridSpec::defaults();
  const auto read = [&j](const char * key, std::vector<double> & out) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw SchemaError(key, "expected an array of numbers");
    out.clear();
    for (const auto & v : j[key]) {
      if (!v.is_number()) throw SchemaError(key, "expected an array of numbers");
      out.push_back(v.get<double>());
    }
  };
  read("w1", g.w1);
  read("w2", g.w2);
  read("w3", g.w3);
  read("w4", g.w4);
  g.validate();
  return g;
}

Json grid_to_json(const GridSpec & g) { return Json{{"w1", g.w1}, {"w2", g.w2}, {"w3", g.w3}, {"w4", g.w4}}; }

Label predict(double reward_a, double reward_b)
{
  const double d = reward_a - reward_b;
  if (d > kTieBand) return Label::A;
  if (d < -kTieBand) return Label::B;
  return Label::Neither;
}

double pair_agreement(const WeightConfig & weights, const std::vector<LabeledPair> & pairs)
{
  if (pairs.empty()) throw NoPairs();
  std::size_t correct = 0;
  for (const auto & p : pairs) {
    correct += predict(aggregate(p.a, weights), aggregate(p.b, weights)) == p.label;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

std::vector<double> reward_deltas(const std::vector<LabeledPair> & pairs, const WeightConfig & weights)
{
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto & p : pairs) out.push_back(aggregate(p.a, weights) - aggregate(p.b, weights));
  return out;
}

GridResult grid_search(const std::vector<LabeledPair> & pairs, const GridSpec & input_grid, unsigned threads)
{
  if (pairs.empty()) throw NoPairs();
  GridSpec g = input_grid;
  g.validate();
  for (auto * v : {&g.w1, &g.w2, &g.w3, &g.w4}) std::sort(v->begin(), v->end());

  // Pairs with a gated plan predict the same label under every weight.
  const WeightConfig probe = weights_at(g, 0, 0, 0, 0);
  std::size_t fixed_correct = 0;
  std::vector<const LabeledPair *> open;
  for (const auto & p : pairs) {
    if (passes_both_gates(p.a) && passes_both_gates(p.b)) {
      open.push_back(&p);
    } else {
      fixed_correct += predict(aggregate(p.a, probe), aggregate(p.b, probe)) == p.label;
    }
  }

  const std::size_t n = open.size();
  const std::size_t n1 = ipow(g.w1.size(), kSoftComponents);
  const std::size_t n2 = ipow(g.w2.size(), kSyntheticPrefComponents);
  const std::size_t n3 = g.w3.size();
  const std::size_t n4 = g.w4.size();

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = sign_of(open[i]->label);

  // Preference means per w2 point, laid out [w2][pair].
  std::vector<double> pa(n2 * n);
  std::vector<double> pb(n2 * n);
  for (std::size_t i2 = 0; i2 < n2; ++i2) {
    const WeightConfig w = weights_at(g, 0, i2, 0, 0);
    for (std::size_t i = 0; i < n; ++i) {
      pa[i2 * n + i] = pref_mean(*open[i]->a.pref, w);
      pb[i2 * n + i] = pref_mean(*open[i]->b.pref, w);
    }
  }

  const auto search_range = [&](std::size_t lo, std::size_t hi) {
    Best best;
    std::vector<double> sa(n), sb(n), xa(n), xb(n);
    for (std::size_t i1 = lo; i1 < hi; ++i1) {
      const WeightConfig w = weights_at(g, i1, 0, 0, 0);
      for (std::size_t i = 0; i < n; ++i) {
        sa[i] = soft_mean(*open[i]->a.soft, w);
        sb[i] = soft_mean(*open[i]->b.soft, w);
      }
      for (std::size_t i3 = 0; i3 < n3; ++i3) {
        const double w3 = g.w3[i3];
        for (std::size_t i = 0; i < n; ++i) {
          // same operation order as clean_reward
          double ra = 2.0;
          ra += w3 * sa[i];
          double rb = 2.0;
          rb += w3 * sb[i];
          xa[i] = ra;
          xb[i] = rb;
        }
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
          const double * qa = pa.data() + i2 * n;
          const double * qb = pb.data() + i2 * n;
          for (std::size_t i4 = 0; i4 < n4; ++i4) {
            const double w4 = g.w4[i4];
            std::size_t correct = fixed_correct;
            for (std::size_t i = 0; i < n; ++i) {
              const double d = (xa[i] + w4 * qa[i]) - (xb[i] + w4 * qb[i]);
              const int pred = static_cast<int>(d > kTieBand) - static_cast<int>(d < -kTieBand);
              correct += pred == labels[i];
            }
            best.offer(correct, ((i1 * n2 + i2) * n3 + i3) * n4 + i4);
          }
        }
      }
    }
    return best;
  };

  unsigned t = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  t = static_cast<unsigned>(std::min<std::size_t>(t, n1));
  std::vector<Best> partial(t);
  if (t == 1) {
    partial[0] = search_range(0, n1);
  } else {
    std::vector<std::thread> workers;
    for (unsigned k = 0; k < t; ++k) {
      const std::size_t lo = n1 * k / t;
      const std::size_t hi = n1 * (k + 1) / t;
      workers.emplace_back([&, k, lo, hi] { partial[k] = search_range(lo, hi); });
    }
    for (auto & w : workers) w.join();
  }
  Best best;
  for (const auto & b : partial) best.offer(b.correct, b.index);

  std::size_t idx = best.index;
  const std::size_t i4 = idx % n4;
  idx /= n4;
  const std::size_t i3 = idx % n3;
  idx /= n3;
  const std::size_t i2 = idx % n2;
  const std::size_t i1 = idx / n2;

  GridResult result;
  result.best = weights_at(g, i1, i2, i3, i4);
  result.accuracy = pair_agreement(result.best, pairs);
  result.grid_points = g.size();
  return result;
}

CrossValidation cross_validate(const std::vector<LabeledPair> & pairs, const GridSpec & grid, std::size_t k,
                               std::uint64_t seed, unsigned threads)
{
  if (k < 2) throw DomainError("cross-validation needs at least two folds");
  if (k > pairs.size()) {
    throw TooFewPairs(std::to_string(k) + " folds need at least " + std::to_string(k) + " pairs, got " +
                      std::to_string(pairs.size()));
  }
  SplitMix64 rng(seed);
  std::vector<std::size_t> fold(pairs.size());
  std::size_t dealt = 0;
  for (const Label l : {Label::A, Label::B, Label::Neither}) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].label == l) group.push_back(i);
    }
    shuffle(group, rng);
    for (const std::size_t i : group) fold[i] = dealt++ % k;
  }

  CrossValidation cv;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<LabeledPair> train;
    std::vector<LabeledPair> test;
    for (std::size_t i = 0; i < pairs.size(); ++i) (fold[i] == f ? test : train).push_back(pairs[i]);
    const GridResult inner = grid_search(train, grid, threads);
    cv.fold_weights.push_back(inner.best);
    cv.fold_accuracies.push_back(pair_agreement(inner.best, test));
  }
  const double kk = static_cast<double>(k);
  cv.mean = std::accumulate(cv.fold_accuracies.begin(), cv.fold_accuracies.end(), 0.0) / kk;
  double ss = 0.0;
  for (const double a : cv.fold_accuracies) ss += (a - cv.mean) * (a - cv.mean);
  cv.stddev = std::sqrt(ss / (kk - 1.0));
  return cv;
}

Interval bootstrap_ci(const std::vector<LabeledPair> & pairs, const WeightConfig & weights, std::size_t iterations,
                      double level, std::uint64_t seed)
{
  if (pairs.empty()) throw NoPairs();
  if (iterations == 0) throw DomainError("bootstrap needs at least one iteration");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0, 1)");
  std::vector<int> hit(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    hit[i] = predict(aggregate(pairs[i].a, weights), aggregate(pairs[i].b, weights)) == pairs[i].label;
  }
  SplitMix64 rng(seed);
  std::vector<double> acc(iterations);
  for (auto & a : acc) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) sum += hit[rng.below(pairs.size())];
    a = static_cast<double>(sum) / static_cast<double>(pairs.size());
  }
  std::sort(acc.begin(), acc.end());
  const double tail = (1.0 - level) / 2.0;
  return {quantile_sorted(acc, tail), quantile_sorted(acc, 1.0 - tail)};
}

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<LabeledPair> & train,
                                              const std::vector<LabeledPair> & validation,
                                              const WeightConfig & weights)
{
  if (train.empty()) throw NoPairs();
  std::vector<std::pair<std::string, WeightConfig>> variants;
  variants.emplace_back("baseline", weights);
  for (const double s : {0.5, 1.0, 1.5, 2.0}) {
    WeightConfig w = weights;
    w.soft_multiplier *= s;
    w.pref_multiplier_synthetic *= s;
    w.pref_multiplier_real_world *= s;
    char name[32];
    std::snprintf(name, sizeof name, "scale x%.1f", s);
    variants.emplace_back(name, w);
  }
  const auto smoothed = [&weights](double temperature) {
    WeightConfig w = weights;
    const auto normalize = [temperature](auto & arr) {
      double sum = 0.0;
      for (auto & x : arr) {
        x = std::pow(x, 1.0 / temperature);
        sum += x;
      }
      for (auto & x : arr) x /= sum;
    };
    normalize(w.soft);
    normalize(w.pref_synthetic);
    w.pref_real_world = 1.0;
    return w;
  };
  for (const double t : {0.5, 1.0, 2.0}) {
    char name[32];
    std::snprintf(name, sizeof name, "simplex T=%g", t);
    variants.emplace_back(name, smoothed(t));
  }

  std::vector<SensitivityRow> rows;
  for (auto & [name, w] : variants) {
    SensitivityRow row{name, w, pair_agreement(w, train), std::nullopt};
    if (!validation.empty()) row.validation_accuracy = pair_agreement(w, validation);
    rows.push_back(std::move(row));
  }
  return rows;
}

CalibrationResult calibrate(const std::vector<LabeledPair> & pairs, const CalibrationOptions & options)
{
  CalibrationResult r;
  r.pairs = pairs.size();
  for (const auto & p : pairs) ++r.label_counts[p.label];
  const GridResult g = grid_search(pairs, options.grid, options.threads);
  r.grid_points = g.grid_points;
  r.best = g.best;
  r.train_accuracy = g.accuracy;
  const CrossValidation cv = cross_validate(pairs, options.grid, options.folds, options.seed, options.threads);
  r.fold_accuracies = cv.fold_accuracies;
  r.cv_mean = cv.mean;
  r.cv_stddev = cv.stddev;
  r.bootstrap = bootstrap_ci(pairs, g.best, options.bootstrap_iterations, options.level, options.seed);
  r.bootstrap_level = options.level;
  std::vector<Label> labels;
  for (const auto & p : pairs) labels.push_back(p.label);
  r.kendall_tau = kendall_tau(reward_deltas(pairs, g.best), labels);
  return r;
}

Json calibration_to_json(const CalibrationResult & r)
{
  Json counts = Json::object();
  for (const Label l : {Label::A, Label::B, Label::Neither}) {
    auto it = r.label_counts.find(l);
    counts[std::string(to_string(l))] = it == r.label_counts.end() ? 0 : it->second;
  }
  return Json{{"pairs", r.pairs},
              {"labelCounts", counts},
              {"gridPoints", r.grid_points},
              {"bestWeights", weights_to_json(r.best)},
              {"trainAccuracy", r.train_accuracy},
              {"foldAccuracies", r.fold_accuracies},
              {"cvMean", r.cv_mean},
              {"cvStd", r.cv_stddev},
              {"bootstrapCI", {{"level", r.bootstrap_level}, {"low", r.bootstrap.low}, {"high", r.bootstrap.high}}},
              {"kendallTau", r.kendall_tau}};
}

std::vector<LabeledPair> labeled_pairs(const std::vector<AnnotationPair> & pairs)
{
  std::vector<LabeledPair> out;
  for (const auto & p : pairs) {
    const auto label = p.majority_label ? p.majority_label : majority_label(p.rater_labels);
    if (!label || !p.scores_a || !p.scores_b) continue;
    out.push_back({p.pair_id, *p.scores_a, *p.scores_b, *label});
  }
  return out;
}

}  // namespace tripscore
