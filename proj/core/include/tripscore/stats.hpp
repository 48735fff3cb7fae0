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

#ifndef TRIPSCORE__STATS_HPP_
#define TRIPSCORE__STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tripscore/model.hpp"

namespace tripscore
{

/// Strict majority of the rater labels; nullopt when no label has one.
std::optional<Label> majority_label(const std::vector<Label> & labels);

/// A -> +1, B -> -1, neither -> 0.
int label_sign(Label label);

/// Cohen's kappa over arbitrary integer category codes. Returns 1 when
/// chance agreement is already 1. Throws LengthMismatch, NoPairs.
double cohen_kappa(std::span<const int> r1, std::span<const int> r2);
double cohen_kappa(const std::vector<Label> & r1, const std::vector<Label> & r2);

/// Fleiss' kappa from an items x categories count matrix where every row
/// sums to the same rater count m >= 2. Throws LengthMismatch (ragged
/// rows), DomainError (m < 2), NoPairs (no items).
double fleiss_kappa(const std::vector<std::vector<std::size_t>> & counts);

/// items x {A, B, neither} counts from per-item rater labels.
std::vector<std::vector<std::size_t>> rating_matrix(const std::vector<std::vector<Label>> & item_labels);

/// Share of agreeing rater pairs, averaged over items.
double mean_pairwise_agreement(const std::vector<std::vector<Label>> & item_labels);
/// Share of items on which every rater agrees.
double all_agree_rate(const std::vector<std::vector<Label>> & item_labels);
/// Cohen's kappa averaged over all rater-column pairs.
double mean_pairwise_cohen_kappa(const std::vector<std::vector<Label>> & item_labels);

/// Kendall tau-b, O(n log n). Returns 0 when either side is constant.
/// Throws LengthMismatch, NoPairs.
double kendall_tau_b(std::span<const double> x, std::span<const double> y);
/// tau-b between reward deltas and sign-mapped labels.
double kendall_tau(const std::vector<double> & deltas, const std::vector<Label> & labels);

/// Symmetric K-class rater noise model. `noise_model` inverts
/// A = r^2 + (1 - r)^2 / (K - 1) for r; `noise_model_r_model` solves
/// A = r * r_m + (1 - r)(1 - r_m) / (K - 1) for r_m; `noise_model_all_agree`
/// is the three-rater unanimity rate r^3 + (1 - r)^3 / (K - 1)^2.
/// Throw DomainError outside their domains.
double noise_model(double a_pair, int k);
double noise_model_r_model(double a_model, double r, int k);
double noise_model_all_agree(double r, int k);
double noise_model_pair_agreement(double r, int k);

}  // namespace tripscore

#endif  // TRIPSCORE__STATS_HPP_
