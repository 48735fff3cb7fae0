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

#ifndef TRIPSCORE__EVALUATOR_HPP_
#define TRIPSCORE__EVALUATOR_HPP_

#include <optional>
#include <string_view>

#include "tripscore/judge.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

/// RuleOnly never contacts a judge and uses 0.5 for judge components.
enum class Mode { RuleOnly, Full };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view s);

struct EvalOptions
{
  Mode mode = Mode::RuleOnly;
  WeightConfig weights = WeightConfig::optimized();
  JudgePort * judge = nullptr;  // required in Full mode
};

/// Format gate, commonsense gate, then soft and preference scores and the
/// gated reward. Soft and preference scores are filled whenever the format
/// gate passes; the judge is only consulted for plans passing both gates,
/// after every rule score is known.
ScoreBreakdown evaluate(std::string_view raw_text, const Query & query, const ReferenceCatalog & catalog,
                        const EvalOptions & options = {});

}  // namespace tripscore

#endif  // TRIPSCORE__EVALUATOR_HPP_
