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

#include "tripscore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "tripscore/errors.hpp"

namespace tripscore
{
namespace
{

std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

// Pairs among n items: n choose 2.
double pairs_of(double n) { return n * (n - 1.0) / 2.0; }

// Sum over runs of equal keys (consecutive in `v`) of run-length choose 2.
template <class T>
double tied_pairs(const std::vector<T> & v)
{
  double total = 0.0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (i < v.size() && v[i] == v[i - 1]) {
      ++run;
    } else {
      total += pairs_of(static_cast<double>(run));
      run = 1;
    }
  }
  return v.empty() ? 0.0 : total;
}

// Stable merge sort that counts the inversions it removes.
double sort_counting_swaps(std::vector<double> & v)
{
  std::vector<double> buf(v.size());
  double swaps = 0.0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          swaps += static_cast<double>(mid - i);
          buf[k++] = v[j++];
        } else {
          buf[k++] = v[i++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
    }
    v.swap(buf);
  }
  return swaps;
}

void require_k(int k)
{
  if (k < 2) throw DomainError("noise model needs K >= 2, got " + std::to_string(k));
}

}  // namespace

std::optional<Label> majority_label(const std::vector<Label> & labels)
{
  std::array<std::size_t, 3> counts{};
  for (const Label l : labels) ++counts[label_index(l)];
  for (const Label l : {Label::A, Label::B, Label::Neither}) {
    if (2 * counts[label_index(l)] > labels.size()) return l;
  }
  return std::nullopt;
}

int label_sign(Label label)
{
  switch (label) {
    case Label::A:
      return 1;
    case Label::B:
      return -1;
    case Label::Neither:
      return 0;
  }
  return 0;
}

double cohen_kappa(std::span<const int> r1, std::span<const int> r2)
{
  if (r1.size() != r2.size()) {
    throw LengthMismatch("rating vectors differ in length: " + std::to_string(r1.size()) + " vs " +
                         std::to_string(r2.size()));
  }
  if (r1.empty()) throw NoPairs("no ratings");
  const double n = static_cast<double>(r1.size());
  std::map<int, std::pair<double, double>> marginals;
  double agree = 0.0;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    agree += r1[i] == r2[i];
    marginals[r1[i]].first += 1.0;
    marginals[r2[i]].second += 1.0;
  }
  const double po = agree / n;
  double pe = 0.0;
  for (const auto & [code, m] : marginals) pe += (m.first / n) * (m.second / n);
  if (pe >= 1.0) return 1.0;
  return (po - pe) / (1.0 - pe);
}

double cohen_kappa(const std::vector<Label> & r1, const std::vector<Label> & r2)
{
  std::vector<int> a(r1.size());
  std::vector<int> b(r2.size());
  std::transform(r1.begin(), r1.end(), a.begin(), label_sign);
  std::transform(r2.begin(), r2.end(), b.begin(), label_sign);
  return cohen_kappa(std::span<const int>(a), std::span<const int>(b));
}

double fleiss_kappa(const std::vector<std::vector<std::size_t>> & counts)
{
  if (counts.empty()) throw NoPairs("no rated items");
  const std::size_t categories = counts.front().size();
  const std::size_t m = std::accumulate(counts.front().begin(), counts.front().end(), std::size_t{0});
  if (m < 2) throw DomainError("Fleiss' kappa needs at least two raters per item");
  const double N = static_cast<double>(counts.size());
  const double M = static_cast<double>(m);
  std::vector<double> column(categories, 0.0);
  double p_bar = 0.0;
  for (const auto & row : counts) {
    if (row.size() != categories || std::accumulate(row.begin(), row.end(), std::size_t{0}) != m) {
      throw LengthMismatch("every item needs the same number of categories and raters");
    }
    double sq = 0.0;
    for (std::size_t j = 0; j < categories; ++j) {
      const double c = static_cast<double>(row[j]);
      sq += c * c;
      column[j] += c;
    }
    p_bar += (sq - M) / (M * (M - 1.0));
  }
  p_bar /= N;
  double pe = 0.0;
  for (const double c : column) {
    const double p = c / (N * M);
    pe += p * p;
  }
  if (pe >= 1.0) return 1.0;
  return (p_bar - pe) / (1.0 - pe);
}

std::vector<std::vector<std::size_t>> rating_matrix(const std::vector<std::vector<Label>> & item_labels)
{
  std::vector<std::vector<std::size_t>> out;
  out.reserve(item_labels.size());
  for (const auto & labels : item_labels) {
    std::vector<std::size_t> row(3, 0);
    for (const Label l : labels) ++row[label_index(l)];
    out.push_back(std::move(row));
  }
  return out;
}

double mean_pairwise_agreement(const std::vector<std::vector<Label>> & item_labels)
{
  if (item_labels.empty()) throw NoPairs("no rated items");
  double sum = 0.0;
  for (const auto & row : rating_matrix(item_labels)) {
    const double m = static_cast<double>(std::accumulate(row.begin(), row.end(), std::size_t{0}));
    if (m < 2) throw DomainError("pairwise agreement needs at least two raters per item");
    double agreeing = 0.0;
    for (const std::size_t c : row) agreeing += pairs_of(static_cast<double>(c));
    sum += agreeing / pairs_of(m);
  }
  return sum / static_cast<double>(item_labels.size());
}

double all_agree_rate(const std::vector<std::vector<Label>> & item_labels)
{
  if (item_labels.empty()) throw NoPairs("no rated items");
  std::size_t agree = 0;
  for (const auto & labels : item_labels) {
    agree += !labels.empty() && std::all_of(labels.begin(), labels.end(), [&](Label l) { return l == labels[0]; });
  }
  return static_cast<double>(agree) / static_cast<double>(item_labels.size());
}

double mean_pairwise_cohen_kappa(const std::vector<std::vector<Label>> & item_labels)
{
  if (item_labels.empty()) throw NoPairs("no rated items");
  const std::size_t raters = item_labels.front().size();
  if (raters < 2) throw DomainError("Cohen's kappa needs at least two raters");
  std::vector<std::vector<Label>> columns(raters);
  for (const auto & labels : item_labels) {
    if (labels.size() != raters) throw LengthMismatch("every item needs the same number of raters");
    for (std::size_t r = 0; r < raters; ++r) columns[r].push_back(labels[r]);
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t a = 0; a < raters; ++a) {
    for (std::size_t b = a + 1; b < raters; ++b) {
      sum += cohen_kappa(columns[a], columns[b]);
      ++n;
    }
  }
  return sum / static_cast<double>(n);
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size()) throw LengthMismatch("kendall tau inputs differ in length");
  if (x.empty()) throw NoPairs();
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });
  std::vector<double> xs(n);
  std::vector<std::pair<double, double>> xy(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[order[i]];
    xy[i] = {x[order[i]], y[order[i]]};
    ys[i] = y[order[i]];
  }
  const double n0 = pairs_of(static_cast<double>(n));
  const double n1 = tied_pairs(xs);
  const double n3 = tied_pairs(xy);
  const double swaps = sort_counting_swaps(ys);
  const double n2 = tied_pairs(ys);
  const double denom = std::sqrt((n0 - n1) * (n0 - n2));
  if (denom == 0.0) return 0.0;
  return (n0 - n1 - n2 + n3 - 2.0 * swaps) / denom;
}

double kendall_tau(const std::vector<double> & deltas, const std::vector<Label> & labels)
{
  std::vector<double> signs(labels.size());
  std::transform(labels.begin(), labels.end(), signs.begin(), [](Label l) { return double(label_sign(l)); });
  return kendall_tau_b(deltas, signs);
}

double noise_model(double a_pair, int k)
{
  require_k(k);
  const double K = k;
  if (!(K * a_pair > 1.0) || a_pair > 1.0) {
    throw DomainError("pairwise agreement must lie in (1/K, 1], got " + std::to_string(a_pair));
  }
  return (1.0 + std::sqrt((K - 1.0) * (K * a_pair - 1.0))) / K;
}

double noise_model_r_model(double a_model, double r, int k)
{
  require_k(k);
  const double K = k;
  const double denom = K * r - 1.0;
  if (denom == 0.0) throw DomainError("rater reliability r = 1/K leaves the model reliability undetermined");
  return (K * a_model - a_model + r - 1.0) / denom;
}

double noise_model_all_agree(double r, int k)
{
  require_k(k);
  const double K = k;
  const double q = 1.0 - r;
  return r * r * r + q * q * q / ((K - 1.0) * (K - 1.0));
}

double noise_model_pair_agreement(double r, int k)
{
  require_k(k);
  const double q = 1.0 - r;
  return r * r + q * q / (static_cast<double>(k) - 1.0);
}

}  // namespace tripscore
