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

#include "tripscore/judge.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <mutex>

#include <httplib.h>

#include "tripscore/errors.hpp"

namespace tripscore
{
namespace
{

#include "prompt_texts.inc"

constexpr std::string_view kIconicCriterion = "iconic";
constexpr std::string_view kDiversityCriterion = "diversity";
constexpr std::string_view kRequestCriterion = "userRequest";

// ---------------------------------------------------------------------------
// in-flight limiter

class InflightLimiter
{
public:
  void set_capacity(std::size_t cap)
  {
    {
      std::lock_guard lock(mutex_);
      capacity_ = std::max<std::size_t>(cap, 1);
    }
    cv_.notify_all();
  }
  std::size_t capacity()
  {
    std::lock_guard lock(mutex_);
    return capacity_;
  }
  void acquire()
  {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [this] { return in_flight_ < capacity_; });
    ++in_flight_;
  }
  void release()
  {
    {
      std::lock_guard lock(mutex_);
      --in_flight_;
    }
    cv_.notify_one();
  }

private:
  std::mutex mutex_;
  std::condition_variable cv_;
  std::size_t capacity_ = 8;
  std::size_t in_flight_ = 0;
};

InflightLimiter & limiter()
{
  static InflightLimiter instance;
  return instance;
}

struct InflightSlot
{
  InflightSlot() { limiter().acquire(); }
  ~InflightSlot() { limiter().release(); }
  InflightSlot(const InflightSlot &) = delete;
  InflightSlot & operator=(const InflightSlot &) = delete;
};

// ---------------------------------------------------------------------------
// fixed judges

class MockJudge : public JudgePort
{
public:
  explicit MockJudge(std::string salt) : salt_(std::move(salt)) {}

  LikertRating rate_iconic(std::string_view text) override { return likert(text, kIconicCriterion); }
  LikertRating rate_diversity(std::string_view text) override { return likert(text, kDiversityCriterion); }
  RequestRating rate_user_request(std::string_view request, std::string_view text) override
  {
    std::string key(request);
    key += '\x1f';
    key += text;
    RequestRating r;
    r.final_score = rating(key, kRequestCriterion);
    r.feedback = "mock";
    return r;
  }

private:
  int rating(std::string_view text, std::string_view criterion) const
  {
    std::string key = salt_;
    key += text;
    key += '\x1f';
    key += criterion;
    return 1 + static_cast<int>(stable_hash(key) % 5);
  }
  LikertRating likert(std::string_view text, std::string_view criterion) const
  {
    LikertRating r;
    r.rating = rating(text, criterion);
    r.explanation = "mock";
    return r;
  }

  std::string salt_;
};

class ConstantJudge : public JudgePort
{
public:
  ConstantJudge(int likert, int request) : likert_(likert), request_(request) {}
  LikertRating rate_iconic(std::string_view) override { return {likert_, false, {}, "constant"}; }
  LikertRating rate_diversity(std::string_view) override { return {likert_, false, {}, "constant"}; }
  RequestRating rate_user_request(std::string_view, std::string_view) override { return {request_, false, "constant"}; }

private:
  int likert_;
  int request_;
};

// ---------------------------------------------------------------------------
// HTTP judge

struct Endpoint
{
  std::string base;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string & url)
{
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw JudgeUnavailable("judge endpoint must be an absolute URL: " + url);
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

// Depth-first search for the first string under a "content" or "text" key.
std::optional<std::string> first_text(const Json & j)
{
  if (j.is_object()) {
    for (const char * key : {"content", "text"}) {
      auto it = j.find(key);
      if (it != j.end() && it->is_string()) return it->get<std::string>();
    }
    for (const auto & [k, v] : j.items()) {
      if (auto s = first_text(v)) return s;
    }
  } else if (j.is_array()) {
    for (const auto & v : j) {
      if (auto s = first_text(v)) return s;
    }
  }
  return std::nullopt;
}

std::string reply_text(const std::string & body)
{
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::exception &) {
    throw JudgeMalformedResponse("judge response body is not JSON");
  }
  if (j.contains("choices") && j["choices"].is_array() && !j["choices"].empty()) {
    const auto & c = j["choices"][0];
    if (c.contains("message") && c["message"].contains("content") && c["message"]["content"].is_string()) {
      return c["message"]["content"].get<std::string>();
    }
  }
  if (auto s = first_text(j)) return *s;
  throw JudgeMalformedResponse("judge response carries no text content");
}

class HttpJudge : public JudgePort
{
public:
  explicit HttpJudge(JudgeConfig config) : config_(std::move(config)), endpoint_(split_url(config_.endpoint_url))
  {
    const auto pick = [this](const char * key, std::string_view fallback) {
      auto it = config_.template_overrides.find(key);
      return it == config_.template_overrides.end() ? std::string(fallback) : it->second;
    };
    iconic_ = pick("iconic", prompt_template(PromptKind::IconicLandmarks));
    diversity_ = pick("diversity", prompt_template(PromptKind::AttractionDiversity));
    request_ = pick("userRequest", prompt_template(PromptKind::UserRequest));
  }

  LikertRating rate_iconic(std::string_view text) override
  {
    const auto prompt = render_prompt(iconic_, {{"answer_text", std::string(text)}});
    return with_retries([&] { return parse_likert_reply(chat(prompt), "missing_attractions"); });
  }
  LikertRating rate_diversity(std::string_view text) override
  {
    const auto prompt = render_prompt(diversity_, {{"answer_text", std::string(text)}});
    return with_retries([&] { return parse_likert_reply(chat(prompt), "diversity_issues"); });
  }
  RequestRating rate_user_request(std::string_view request, std::string_view text) override
  {
    const auto prompt =
      render_prompt(request_, {{"user_request", std::string(request)}, {"answer_text", std::string(text)}});
    return with_retries([&] { return parse_request_reply(chat(prompt)); });
  }

private:
  template <class F>
  auto with_retries(F && attempt) -> decltype(attempt())
  {
    const int tries = std::max(config_.max_retries, 0) + 1;
    for (int i = 1;; ++i) {
      try {
        return attempt();
      } catch (const JudgeUnavailable &) {
        if (i >= tries) throw;
      } catch (const JudgeMalformedResponse &) {
        if (i >= tries) throw;
      }
    }
  }

  std::string chat(const std::string & prompt)
  {
    Json body = {{"model", config_.model},
                 {"temperature", 0},
                 {"messages", Json::array({Json{{"role", "user"}, {"content", prompt}}})}};
    httplib::Headers headers;
    if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);

    httplib::Client client(endpoint_.base);
    const auto secs = static_cast<time_t>(config_.timeout_seconds);
    const auto usecs = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    InflightSlot slot;
    auto res = client.Post(endpoint_.path, headers, body.dump(), "application/json");
    if (!res) throw JudgeUnavailable("judge request failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300) {
      throw JudgeUnavailable("judge endpoint returned HTTP " + std::to_string(res->status));
    }
    return reply_text(res->body);
  }

  JudgeConfig config_;
  Endpoint endpoint_;
  std::string iconic_;
  std::string diversity_;
  std::string request_;
};

const Json * rating_field(const Json & j, std::initializer_list<const char *> keys)
{
  for (const char * key : keys) {
    auto it = j.find(key);
    if (it != j.end()) return &*it;
  }
  return nullptr;
}

// Integer rating from a number or a numeric string.
std::optional<long long> as_rating(const Json & v)
{
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) return std::nullopt;
    return std::llround(d);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    char * end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || !std::isfinite(d)) return std::nullopt;
    return std::llround(d);
  }
  return std::nullopt;
}

std::string string_field(const Json & j, const char * key)
{
  auto it = j.find(key);
  if (it == j.end()) return {};
  return it->is_string() ? it->get<std::string>() : it->dump();
}

}  // namespace

std::uint64_t stable_hash(std::string_view text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::unique_ptr<JudgePort> mock_judge(std::string salt) { return std::make_unique<MockJudge>(std::move(salt)); }

std::unique_ptr<JudgePort> constant_judge(int likert_rating, int request_score)
{
  return std::make_unique<ConstantJudge>(std::clamp(likert_rating, 1, 5), std::clamp(request_score, 0, 5));
}

JudgeConfig JudgeConfig::from_env()
{
  JudgeConfig c;
  if (const char * v = std::getenv("JUDGE_URL")) c.endpoint_url = v;
  if (const char * v = std::getenv("JUDGE_MODEL")) c.model = v;
  if (const char * v = std::getenv("JUDGE_API_KEY")) c.api_key = v;
  return c;
}

std::unique_ptr<JudgePort> http_judge(JudgeConfig config) { return std::make_unique<HttpJudge>(std::move(config)); }

void set_judge_inflight_cap(std::size_t cap) { limiter().set_capacity(cap); }
std::size_t judge_inflight_cap() { return limiter().capacity(); }

std::string_view prompt_template(PromptKind kind)
{
  switch (kind) {
    case PromptKind::IconicLandmarks:
      return k_iconic_landmarks_prompt;
    case PromptKind::AttractionDiversity:
      return k_attraction_diversity_prompt;
    case PromptKind::UserRequest:
      return k_user_request_prompt;
  }
  return {};
}

std::string render_prompt(std::string_view tmpl, const std::map<std::string, std::string> & bindings)
{
  const auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  const auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{' && i + 1 < tmpl.size() && ident_start(tmpl[i + 1])) {
      std::size_t j = i + 1;
      while (j < tmpl.size() && ident(tmpl[j])) ++j;
      if (j < tmpl.size() && tmpl[j] == '}') {
        const std::string name(tmpl.substr(i + 1, j - i - 1));
        auto it = bindings.find(name);
        if (it == bindings.end()) throw UnknownPlaceholder(name);
        out += it->second;
        i = j + 1;
        continue;
      }
    }
    out += tmpl[i++];
  }
  return out;
}

std::optional<Json> extract_first_json_object(std::string_view text)
{
  for (std::size_t start = text.find('{'); start != std::string_view::npos; start = text.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        try {
          Json j = Json::parse(text.substr(start, i - start + 1));
          if (j.is_object()) return j;
        } catch (const Json::exception &) {
        }
        break;
      }
    }
  }
  return std::nullopt;
}

LikertRating parse_likert_reply(std::string_view reply, std::string_view notes_field)
{
  const auto j = extract_first_json_object(reply);
  if (!j) throw JudgeMalformedResponse("no JSON object in judge reply");
  const Json * field = rating_field(*j, {"score", "final_score", "rating"});
  const auto value = field ? as_rating(*field) : std::nullopt;
  if (!value) throw JudgeMalformedResponse("judge reply has no numeric score");
  LikertRating r;
  r.rating = static_cast<int>(std::clamp<long long>(*value, 1, 5));
  r.clamped = r.rating != *value;
  auto notes = j->find(std::string(notes_field));
  if (notes != j->end() && notes->is_array()) {
    for (const auto & n : *notes) r.notes.push_back(n.is_string() ? n.get<std::string>() : n.dump());
  }
  r.explanation = string_field(*j, "explanation");
  return r;
}

RequestRating parse_request_reply(std::string_view reply)
{
  const auto j = extract_first_json_object(reply);
  if (!j) throw JudgeMalformedResponse("no JSON object in judge reply");
  const Json * field = rating_field(*j, {"final_score", "score", "rating"});
  const auto value = field ? as_rating(*field) : std::nullopt;
  if (!value) throw JudgeMalformedResponse("judge reply has no numeric final_score");
  RequestRating r;
  r.final_score = static_cast<int>(std::clamp<long long>(*value, 0, 5));
  r.clamped = r.final_score != *value;
  r.feedback = string_field(*j, "detailed_feedback");
  return r;
}

}  // namespace tripscore
