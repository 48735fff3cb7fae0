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

#include "tripscore/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <cctype>
#include <optional>

namespace tripscore
{
namespace
{

struct RawLink
{
  EntityLink link;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<RawLink> scan_links(std::string_view s)
{
  std::vector<RawLink> out;
  std::size_t i = 0;
  while (true) {
    const auto open = s.find("**", i);
    if (open == std::string_view::npos) break;
    const auto close = s.find("**", open + 2);
    if (close == std::string_view::npos) break;
    const std::string_view inner = s.substr(open + 2, close - open - 2);
    i = close + 2;
    if (inner.empty()) continue;

    EntityLink link;
    if (inner.front() == '[') {
      const auto rb = inner.find(']');
      if (rb == std::string_view::npos) continue;
      link.name = std::string(inner.substr(1, rb - 1));
      const std::string_view rest = inner.substr(rb + 1);
      if (rest.empty()) {
        link.external = true;
      } else if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
        link.id = std::string(rest.substr(1, rest.size() - 2));
        link.external = link.id.empty();
      } else {
        continue;
      }
    } else {
      link.name = std::string(inner);
      link.external = true;
    }
    out.push_back({std::move(link), open, close + 2});
  }
  return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t sentence_end(std::string_view s, std::size_t from, std::size_t limit)
{
  for (std::size_t k = from; k < limit; ++k) {
    const char c = s[k];
    if (c == '\n' || c == ';' || c == '!' || c == '?') return k;
    if (c == '.' && (k + 1 == s.size() || std::isspace(static_cast<unsigned char>(s[k + 1])))) return k;
  }
  return limit;
}

std::vector<ClockTime> clock_tokens(std::string_view s)
{
  std::vector<ClockTime> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != ':') continue;
    // minutes: exactly two digits, not followed by a third
    if (k + 2 >= s.size()) continue;
    if (!is_digit(s[k + 1]) || !is_digit(s[k + 2])) continue;
    if (k + 3 < s.size() && is_digit(s[k + 3])) continue;
    // hours: one or two digits, not preceded by a third
    std::size_t h_begin = k;
    while (h_begin > 0 && is_digit(s[h_begin - 1]) && k - h_begin < 3) --h_begin;
    const std::size_t h_len = k - h_begin;
    if (h_len == 0 || h_len > 2) continue;
    const int hour = h_len == 1 ? s[h_begin] - '0' : (s[h_begin] - '0') * 10 + (s[h_begin + 1] - '0');
    const int minute = (s[k + 1] - '0') * 10 + (s[k + 2] - '0');
    if (hour > 23 || minute > 59) continue;
    out.emplace_back(hour * 60 + minute);
  }
  return out;
}

}  // namespace

std::string normalize_name(std::string_view text)
{
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 * nfc = icu::Normalizer2::getNFCInstance(status);
  std::string composed;
  if (U_SUCCESS(status)) {
    const auto src = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    const icu::UnicodeString dst = nfc->normalize(src, status);
    if (U_SUCCESS(status)) dst.toUTF8String(composed);
  }
  if (U_FAILURE(status)) composed.assign(text);

  std::string out;
  out.reserve(composed.size());
  bool pending_space = false;
  for (const char c : composed) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<EntityLink> extract_links(std::string_view description)
{
  std::vector<EntityLink> out;
  for (auto & raw : scan_links(description)) out.push_back(std::move(raw.link));
  return out;
}

std::vector<LinkTimes> link_time_mentions(std::string_view description)
{
  const auto raw = scan_links(description);
  std::vector<LinkTimes> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::size_t next = i + 1 < raw.size() ? raw[i + 1].begin : description.size();
    const std::size_t stop = sentence_end(description, raw[i].end, next);
    out.push_back({raw[i].link, clock_tokens(description.substr(raw[i].end, stop - raw[i].end))});
  }
  return out;
}

void refresh_links(Itinerary & itinerary)
{
  for (auto & day : itinerary.days) {
    for (auto & block : day.blocks) block.links = extract_links(block.description);
  }
}

}  // namespace tripscore
