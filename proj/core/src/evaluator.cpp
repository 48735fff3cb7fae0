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

#include "tripscore/evaluator.hpp"

#include <future>

#include "tripscore/commonsense_checker.hpp"
#include "tripscore/errors.hpp"
#include "tripscore/format_checker.hpp"
#include "tripscore/preference_scorer.hpp"
#include "tripscore/reward.hpp"
#include "tripscore/soft_scorer.hpp"
#include "tripscore/timeline.hpp"

namespace tripscore
{

std::string_view to_string(Mode mode) { return mode == Mode::Full ? "full" : "ruleOnly"; }

std::optional<Mode> parse_mode(std::string_view s)
{
  if (s == "ruleOnly") return Mode::RuleOnly;
  if (s == "full") return Mode::Full;
  return std::nullopt;
}

ScoreBreakdown evaluate(std::string_view raw_text, const Query & query, const ReferenceCatalog & catalog,
                        const EvalOptions & options)
{
  if (options.mode == Mode::Full && options.judge == nullptr) {
    throw PreconditionError("full evaluation needs a judge");
  }
  ScoreBreakdown out;
  FormatOutcome format = evaluate_format(raw_text, catalog);
  out.format_score = format.score;
  out.violations = format.report.violations;
  if (!format.report.passed) {
    out.reward = aggregate(out, options.weights);
    return out;
  }

  const Itinerary & plan = *format.itinerary;
  auto [sc, report] = evaluate_commonsense(format.report, plan, query, catalog);
  out.commonsense_score = sc;
  for (auto & v : report.violations) out.violations.push_back(std::move(v));

  const Itinerary resolved = resolve_activity_times(plan, catalog, query.start_date).itinerary;
  out.soft = score_soft_rules(resolved, catalog);
  out.pref = score_preference_rules(resolved, query, catalog);

  if (options.mode == Mode::Full && report.passed) {
    JudgePort * judge = options.judge;
    std::future<std::pair<double, ScoreSource>> request;
    if (query.split == Split::RealWorld) {
      request = std::async(std::launch::async, [&] { return score_user_request(raw_text, query.request_text, judge); });
    }
    const LikertScores likert = score_likert_subscores(raw_text, judge);
    out.soft->iconic = likert.iconic;
    out.soft->diversity = likert.diversity;
    out.soft->iconic_source = likert.source;
    out.soft->diversity_source = likert.source;
    if (request.valid()) {
      const auto [value, source] = request.get();
      out.pref->user_request = value;
      out.pref->user_request_source = source;
    }
  }
  out.reward = aggregate(out, options.weights);
  return out;
}

}  // namespace tripscore
