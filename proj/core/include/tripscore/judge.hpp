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

#ifndef TRIPSCORE__JUDGE_HPP_
#define TRIPSCORE__JUDGE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tripscore/io.hpp"

namespace tripscore
{

/// Likert rating for the iconic-landmark and diversity criteria.
struct LikertRating
{
  int rating = 3;        // 1..5
  bool clamped = false;  // the judge answered outside 1..5
  std::vector<std::string> notes;  // missing attractions / diversity issues
  std::string explanation;
};

struct RequestRating
{
  int final_score = 0;  // 0..5
  bool clamped = false;
  std::string feedback;
};

/// Port for the three judge-evaluated criteria. Implementations must be
/// safe to call from several threads at once.
class JudgePort
{
public:
  virtual ~JudgePort() = default;
  virtual LikertRating rate_iconic(std::string_view itinerary_text) = 0;
  virtual LikertRating rate_diversity(std::string_view itinerary_text) = 0;
  virtual RequestRating rate_user_request(std::string_view request_text, std::string_view itinerary_text) = 0;
};

/// 64-bit FNV-1a.
std::uint64_t stable_hash(std::string_view text);

/// Offline judge: rating = 1 + stable_hash(salt ++ input ++ criterion) mod 5.
std::unique_ptr<JudgePort> mock_judge(std::string salt = {});

/// Returns the same ratings for every input.
std::unique_ptr<JudgePort> constant_judge(int likert_rating, int request_score);

struct JudgeConfig
{
  std::string endpoint_url;  // e.g. https://host/v1/chat/completions
  std::string model;
  std::string api_key;  // sent as a bearer token when non-empty
  double timeout_seconds = 60.0;
  int max_retries = 2;
  // keys: "iconic", "diversity", "userRequest"
  std::map<std::string, std::string> template_overrides;

  /// Reads JUDGE_URL, JUDGE_MODEL and JUDGE_API_KEY.
  static JudgeConfig from_env();
};

/// Chat-completions adapter. Requests use temperature 0.
std::unique_ptr<JudgePort> http_judge(JudgeConfig config);

/// Process-wide cap on concurrent HTTP judge requests (default 8).
void set_judge_inflight_cap(std::size_t cap);
std::size_t judge_inflight_cap();

enum class PromptKind { IconicLandmarks, AttractionDiversity, UserRequest };

/// Shipped prompt text for `kind`.
std::string_view prompt_template(PromptKind kind);

/// Replaces every {name} placeholder (identifier characters only) with its
/// binding. Other braces are left alone. Throws UnknownPlaceholder.
std::string render_prompt(std::string_view tmpl, const std::map<std::string, std::string> & bindings);

/// First balanced {...} in `text` that parses as a JSON object.
std::optional<Json> extract_first_json_object(std::string_view text);

/// Parse a judge reply. Throw JudgeMalformedResponse when no usable object
/// or rating field is found; out-of-range ratings are clamped and flagged.
LikertRating parse_likert_reply(std::string_view reply, std::string_view notes_field);
RequestRating parse_request_reply(std::string_view reply);

}  // namespace tripscore

#endif  // TRIPSCORE__JUDGE_HPP_
