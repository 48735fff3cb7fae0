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

#ifndef TRIPSCORE__CALIBRATE_HPP_
#define TRIPSCORE__CALIBRATE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripscore/io.hpp"
#include "tripscore/model.hpp"
#include "tripscore/random.hpp"

namespace tripscore
{

// Reward differences within this band predict "neither".
inline constexpr double kTieBand = 1e-9;

/// A pair whose plans are already scored; only the weights vary.
struct LabeledPair
{
  std::string pair_id;
  ScoreBreakdown a;
  ScoreBreakdown b;
  Label label = Label::Neither;
};

struct GridSpec
{
  std::vector<double> w1;  // shared by all seven soft weights
  std::vector<double> w2;  // shared by the four synthetic preference weights
  std::vector<double> w3;
  std::vector<double> w4;  // written into both splits

  static GridSpec defaults();
  /// Throws DomainError for an empty grid or a non-positive value.
  void validate() const;
  /// |w1|^7 * |w2|^4 * |w3| * |w4|
  std::size_t size() const;
};

GridSpec grid_from_json(const Json & j);
Json grid_to_json(const GridSpec & grid);

/// Label predicted from two rewards with the tie band.
Label predict(double reward_a, double reward_b);

/// Fraction of pairs whose predicted label matches. Throws NoPairs.
double pair_agreement(const WeightConfig & weights, const std::vector<LabeledPair> & pairs);

struct GridResult
{
  WeightConfig best;
  double accuracy = 0.0;
  std::size_t grid_points = 0;
};

/// Exhaustive search. Ties go to the lexicographically smallest weight tuple
/// (w1 first, then w2, w3, w4). The result does not depend on `threads`.
/// Throws NoPairs.
GridResult grid_search(const std::vector<LabeledPair> & pairs, const GridSpec & grid, unsigned threads = 0);

struct CrossValidation
{
  std::vector<double> fold_accuracies;
  std::vector<WeightConfig> fold_weights;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

/// Label-stratified k-fold CV with a grid search on every training fold.
/// Throws TooFewPairs when k exceeds the pair count.
CrossValidation cross_validate(const std::vector<LabeledPair> & pairs, const GridSpec & grid, std::size_t k,
                               std::uint64_t seed, unsigned threads = 0);

struct Interval
{
  double low = 0.0;
  double high = 0.0;
};

/// Percentile bootstrap of pair agreement. Throws NoPairs.
Interval bootstrap_ci(const std::vector<LabeledPair> & pairs, const WeightConfig & weights, std::size_t iterations,
                      double level, std::uint64_t seed);

struct SensitivityRow
{
  std::string variant;
  WeightConfig weights;
  double train_accuracy = 0.0;
  std::optional<double> validation_accuracy;
};

/// Baseline, joint (w3, w4) scalings by 0.5/1/1.5/2, simplex-normalized
/// w1/w2, and temperature-smoothed w1/w2 (w^(1/T) renormalized, T = 0.5, 1,
/// 2). Throws NoPairs when `train` is empty.
std::vector<SensitivityRow> sensitivity_sweep(const std::vector<LabeledPair> & train,
                                              const std::vector<LabeledPair> & validation,
                                              const WeightConfig & weights);

/// Reward deltas R(a) - R(b) under `weights`.
std::vector<double> reward_deltas(const std::vector<LabeledPair> & pairs, const WeightConfig & weights);

struct CalibrationOptions
{
  GridSpec grid = GridSpec::defaults();
  std::size_t folds = 5;
  std::size_t bootstrap_iterations = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct CalibrationResult
{
  std::size_t pairs = 0;
  std::map<Label, std::size_t> label_counts;
  std::size_t grid_points = 0;
  WeightConfig best;
  double train_accuracy = 0.0;
  std::vector<double> fold_accuracies;
  double cv_mean = 0.0;
  double cv_stddev = 0.0;
  Interval bootstrap;
  double bootstrap_level = 0.95;
  double kendall_tau = 0.0;
};

CalibrationResult calibrate(const std::vector<LabeledPair> & pairs, const CalibrationOptions & options);
Json calibration_to_json(const CalibrationResult & result);

/// Pairs with a majority label and both score breakdowns; others are
/// skipped. The stored majority label wins over recomputing it.
std::vector<LabeledPair> labeled_pairs(const std::vector<AnnotationPair> & pairs);

}  // namespace tripscore

#endif  // TRIPSCORE__CALIBRATE_HPP_
