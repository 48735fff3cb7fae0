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

#include "tripscore/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "tripscore/errors.hpp"
#include "tripscore/text.hpp"

namespace tripscore
{
namespace
{

enum class ErrorKind { Schema, Parse };

// Typed field access with a JSON path for error messages.
class Reader
{
public:
  Reader(const Json & node, std::string path, ErrorKind kind) : node_(node), path_(std::move(path)), kind_(kind)
  {
    if (!node_.is_object()) fail_here("expected an object");
  }

  [[noreturn]] void fail(const std::string & key, const std::string & what) const
  {
    throw_error(join(key), what);
  }
  [[noreturn]] void fail_here(const std::string & what) const
  {
    throw_error(path_.empty() ? "$" : path_, what);
  }

  bool has(const std::string & key) const { return node_.contains(key) && !node_.at(key).is_null(); }

  const Json & required(const std::string & key) const
  {
    if (!node_.contains(key)) fail(key, "missing required field");
    return node_.at(key);
  }

  std::string string(const std::string & key) const
  {
    const Json & v = required(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> optional_string(const std::string & key) const
  {
    if (!has(key)) return std::nullopt;
    return string(key);
  }

  double number(const std::string & key) const
  {
    const Json & v = required(key);
    if (!v.is_number()) fail(key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key, "expected a finite number");
    return d;
  }

  long long integer(const std::string & key) const
  {
    const Json & v = required(key);
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (std::floor(d) == d && std::isfinite(d)) return static_cast<long long>(d);
    }
    fail(key, "expected an integer");
  }

  const Json & array(const std::string & key) const
  {
    const Json & v = required(key);
    if (!v.is_array()) fail(key, "expected an array");
    return v;
  }

  Reader object(const std::string & key) const { return Reader(required(key), join(key), kind_); }
  Reader element(const std::string & key, std::size_t i, const Json & item) const
  {
    return Reader(item, join(key) + "[" + std::to_string(i) + "]", kind_);
  }

  template <typename E, typename Parser>
  E enumeration(const std::string & key, Parser parse) const
  {
    const std::string s = string(key);
    const auto v = parse(s);
    if (!v) fail(key, "unsupported value \"" + s + "\"");
    return *v;
  }

  std::string join(const std::string & key) const { return path_.empty() ? key : path_ + "." + key; }
  const Json & node() const { return node_; }
  ErrorKind kind() const { return kind_; }

private:
  [[noreturn]] void throw_error(const std::string & where, const std::string & what) const
  {
    if (kind_ == ErrorKind::Schema) throw SchemaError(where, what);
    throw ParseError(where, what);
  }

  const Json & node_;
  std::string path_;
  ErrorKind kind_;
};

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_code_fence(std::string_view text)
{
  text = trim(text);
  if (text.substr(0, 3) != "```") return text;
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos) return text;
  text.remove_prefix(nl + 1);
  text = trim(text);
  if (text.size() >= 3 && text.substr(text.size() - 3) == "```") text.remove_suffix(3);
  return trim(text);
}

Date date_field(const Reader & r, const std::string & key)
{
  const auto d = parse_date(r.string(key));
  if (!d) r.fail(key, "expected YYYY-MM-DD");
  return *d;
}

ClockTime clock_field(const Reader & r, const std::string & key)
{
  const auto t = parse_clock(r.string(key));
  if (!t) r.fail(key, "expected HH:MM");
  return *t;
}

DateTime datetime_field(const Reader & r, const std::string & key)
{
  const auto t = parse_datetime(r.string(key));
  if (!t) r.fail(key, "expected YYYY-MM-DDTHH:MM");
  return *t;
}

GeoPoint coordinate(const Reader & r)
{
  GeoPoint p{r.number("lat"), r.number("lon")};
  if (!p.valid()) {
    throw InvalidCoordinateError(
      r.join("lat") + ": coordinate (" + std::to_string(p.lat) + ", " + std::to_string(p.lon) + ") out of range");
  }
  return p;
}

int day_number(const Reader & r)
{
  const Json & v = r.required("day");
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 6) {
      r.fail("day", "expected a positive integer");
    }
    return std::stoi(s);
  }
  const auto n = r.integer("day");
  if (n < 1 || n > 100000) r.fail("day", "expected a positive integer");
  return static_cast<int>(n);
}

template <typename T>
void insert_unique(std::map<std::string, T> & map, T value, const std::string & what)
{
  const std::string id = value.id;
  if (id.empty()) throw ParseError(what, "empty id");
  if (!map.emplace(id, std::move(value)).second) throw DuplicateIdError("duplicate " + what + " id \"" + id + "\"");
}

std::vector<std::string> string_list(const Reader & r, const std::string & key)
{
  std::vector<std::string> out;
  const Json & arr = r.array(key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) r.fail(key + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

Json score_or_null(const std::optional<int> & v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

// ---------------------------------------------------------------------------

Json parse_json(std::string_view text)
{
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error & e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError("line " + std::to_string(line), e.what());
  }
}

std::string read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Itinerary

Itinerary itinerary_from_json(const Json & j)
{
  const Reader root(j, "", ErrorKind::Schema);
  Itinerary it;
  it.name = root.string("itineraryName");
  it.recommend_reason = root.string("recommendReason");

  const Json & days = root.array("dayInfos");
  if (days.empty()) root.fail("dayInfos", "at least one day is required");
  for (std::size_t d = 0; d < days.size(); ++d) {
    const Reader day_r = root.element("dayInfos", d, days[d]);
    DayPlan day;
    day.day_index = day_number(day_r);
    if (day.day_index != static_cast<int>(d) + 1) {
      day_r.fail("day", "day indices must run 1..D without gaps, got " + std::to_string(day.day_index));
    }
    day.schedule_title = day_r.string("scheduleTitle");

    const Json & blocks = day_r.array("scheduleDetail");
    if (blocks.empty()) day_r.fail("scheduleDetail", "a day needs at least one period block");
    std::optional<Period> previous;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Reader block_r = day_r.element("scheduleDetail", b, blocks[b]);
      PeriodBlock block;
      block.period = block_r.enumeration<Period>("period", parse_period);
      if (previous && static_cast<int>(block.period) <= static_cast<int>(*previous)) {
        block_r.fail("period", "periods must appear once each, in Morning/Afternoon/Evening order");
      }
      previous = block.period;
      block.description = block_r.string("description");

      const Json & items = block_r.array("detailList");
      for (std::size_t a = 0; a < items.size(); ++a) {
        const Reader item_r = block_r.element("detailList", a, items[a]);
        Activity act;
        act.kind = item_r.enumeration<ActivityKind>("type", parse_activity_kind);
        act.id = item_r.string("id");
        act.name = item_r.string("name");
        if (act.kind != ActivityKind::Poi && act.id.empty()) {
          item_r.fail("id", "hotel and transportation entries need a reference id");
        }
        block.activities.push_back(std::move(act));
      }
      block.links = extract_links(block.description);
      day.blocks.push_back(std::move(block));
    }
    it.days.push_back(std::move(day));
  }

  if (root.has("tips")) {
    const Reader tips_r = root.object("tips");
    it.tips = Tips{tips_r.string("title"), tips_r.string("info")};
  }
  return it;
}

Itinerary load_itinerary(std::string_view text) { return itinerary_from_json(parse_json(strip_code_fence(text))); }

Json itinerary_to_json(const Itinerary & it)
{
  Json days = Json::array();
  for (const auto & day : it.days) {
    Json blocks = Json::array();
    for (const auto & block : day.blocks) {
      Json items = Json::array();
      for (const auto & act : block.activities) {
        items.push_back({{"type", to_string(act.kind)}, {"id", act.id}, {"name", act.name}});
      }
      blocks.push_back(
        {{"period", to_string(block.period)}, {"description", block.description}, {"detailList", std::move(items)}});
    }
    days.push_back(
      {{"day", day.day_index}, {"scheduleTitle", day.schedule_title}, {"scheduleDetail", std::move(blocks)}});
  }
  Json j = {{"itineraryName", it.name}, {"recommendReason", it.recommend_reason}, {"dayInfos", std::move(days)}};
  if (it.tips) j["tips"] = {{"title", it.tips->title}, {"info", it.tips->info}};
  return j;
}

std::string serialize_itinerary(const Itinerary & it) { return itinerary_to_json(it).dump(2); }

// ---------------------------------------------------------------------------
// Catalog

ReferenceCatalog catalog_from_json(const Json & j)
{
  const Reader root(j, "", ErrorKind::Parse);
  ReferenceCatalog cat;

  const Json & pois = root.array("pois");
  for (std::size_t i = 0; i < pois.size(); ++i) {
    const Reader r = root.element("pois", i, pois[i]);
    Poi p;
    p.id = r.string("id");
    p.name = r.string("name");
    p.city = r.string("city");
    p.location = coordinate(r);
    if (r.has("openCalendar")) {
      std::vector<OpenWindow> windows;
      const Json & cal = r.array("openCalendar");
      for (std::size_t w = 0; w < cal.size(); ++w) {
        const Reader wr = r.element("openCalendar", w, cal[w]);
        OpenWindow win{date_field(wr, "from"), date_field(wr, "to"), clock_field(wr, "open"), clock_field(wr, "close")};
        if (!(win.open < win.close)) wr.fail("close", "open window must have open < close");
        if (win.to < win.from) wr.fail("to", "date range ends before it starts");
        windows.push_back(win);
      }
      p.open_calendar = std::move(windows);
    }
    if (r.has("tags")) {
      for (auto & t : string_list(r, "tags")) p.tags.insert(std::move(t));
    }
    if (r.has("recommendedDurationHours")) {
      const double h = r.number("recommendedDurationHours");
      if (!(h > 0.0)) r.fail("recommendedDurationHours", "must be positive");
      p.recommended_duration_hours = h;
    }
    if (r.has("effortClass")) p.effort = r.enumeration<EffortClass>("effortClass", parse_effort_class);
    insert_unique(cat.pois, std::move(p), "poi");
  }

  const Json & hotels = root.array("hotels");
  for (std::size_t i = 0; i < hotels.size(); ++i) {
    const Reader r = root.element("hotels", i, hotels[i]);
    Hotel h;
    h.id = r.string("id");
    h.name = r.string("name");
    h.city = r.string("city");
    const auto stars = r.integer("stars");
    if (stars < 0 || stars > 5) r.fail("stars", "expected 0..5");
    h.stars = static_cast<int>(stars);
    h.location = coordinate(r);
    insert_unique(cat.hotels, std::move(h), "hotel");
  }

  const Json & legs = root.array("transports");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const Reader r = root.element("transports", i, legs[i]);
    TransportLeg t;
    t.id = r.string("id");
    t.number = r.string("number");
    t.mode = r.enumeration<TransportMode>("mode", parse_transport_mode);
    t.origin_city = r.string("originCity");
    t.destination_city = r.string("destinationCity");
    t.depart = datetime_field(r, "depart");
    t.arrive = datetime_field(r, "arrive");
    if (!(t.depart < t.arrive)) r.fail("arrive", "arrival must be after departure");
    insert_unique(cat.transports, std::move(t), "transport");
  }
  return cat;
}

ReferenceCatalog parse_catalog(std::string_view text)
{
  if (trim(text).empty()) throw ParseError("line 1", "empty document");
  return catalog_from_json(parse_json(text));
}

ReferenceCatalog load_catalog(const std::filesystem::path & path) { return parse_catalog(read_file(path)); }

Json catalog_to_json(const ReferenceCatalog & cat)
{
  Json pois = Json::array();
  for (const auto & [id, p] : cat.pois) {
    Json j = {{"id", p.id}, {"name", p.name}, {"city", p.city}, {"lat", p.location.lat}, {"lon", p.location.lon}};
    if (p.open_calendar) {
      Json cal = Json::array();
      for (const auto & w : *p.open_calendar) {
        cal.push_back({{"from", format_date(w.from)},
                       {"to", format_date(w.to)},
                       {"open", format_clock(w.open)},
                       {"close", format_clock(w.close)}});
      }
      j["openCalendar"] = std::move(cal);
    } else {
      j["openCalendar"] = nullptr;
    }
    j["tags"] = p.tags;
    if (p.recommended_duration_hours) j["recommendedDurationHours"] = *p.recommended_duration_hours;
    j["effortClass"] = to_string(p.effort);
    pois.push_back(std::move(j));
  }
  Json hotels = Json::array();
  for (const auto & [id, h] : cat.hotels) {
    hotels.push_back({{"id", h.id},
                      {"name", h.name},
                      {"city", h.city},
                      {"stars", h.stars},
                      {"lat", h.location.lat},
                      {"lon", h.location.lon}});
  }
  Json legs = Json::array();
  for (const auto & [id, t] : cat.transports) {
    legs.push_back({{"id", t.id},
                    {"number", t.number},
                    {"mode", to_string(t.mode)},
                    {"originCity", t.origin_city},
                    {"destinationCity", t.destination_city},
                    {"depart", format_datetime(t.depart)},
                    {"arrive", format_datetime(t.arrive)}});
  }
  return {{"pois", std::move(pois)}, {"hotels", std::move(hotels)}, {"transports", std::move(legs)}};
}

// ---------------------------------------------------------------------------
// Query

Query query_from_json(const Json & j)
{
  const Reader r(j, "", ErrorKind::Parse);
  Query q;
  q.query_id = r.string("queryId");
  q.origin_city = r.string("originCity");
  q.destinations = string_list(r, "destinations");
  if (q.destinations.empty()) r.fail("destinations", "at least one destination is required");
  q.start_date = date_field(r, "startDate");
  const auto days = r.integer("durationDays");
  if (days < 1) r.fail("durationDays", "must be positive");
  q.duration_days = static_cast<int>(days);
  if (r.has("split")) q.split = r.enumeration<Split>("split", parse_split);
  if (r.has("preferences")) {
    const Reader p = r.object("preferences");
    if (p.has("budget")) q.preferences.budget = p.enumeration<Budget>("budget", parse_budget);
    if (p.has("pacing")) q.preferences.pacing = p.enumeration<Pacing>("pacing", parse_pacing);
    if (p.has("attractionTags")) {
      std::set<std::string> tags;
      for (auto & t : string_list(p, "attractionTags")) tags.insert(std::move(t));
      q.preferences.attraction_tags = std::move(tags);
    }
    if (p.has("effort")) q.preferences.effort = p.enumeration<EffortLevel>("effort", parse_effort_level);
  }
  q.request_text = r.optional_string("requestText").value_or("");
  return q;
}

Json query_to_json(const Query & q)
{
  Json prefs = Json::object();
  if (q.preferences.budget) prefs["budget"] = to_string(*q.preferences.budget);
  if (q.preferences.pacing) prefs["pacing"] = to_string(*q.preferences.pacing);
  if (q.preferences.attraction_tags) prefs["attractionTags"] = *q.preferences.attraction_tags;
  if (q.preferences.effort) prefs["effort"] = to_string(*q.preferences.effort);
  return {{"queryId", q.query_id},
          {"originCity", q.origin_city},
          {"destinations", q.destinations},
          {"startDate", format_date(q.start_date)},
          {"durationDays", q.duration_days},
          {"split", to_string(q.split)},
          {"preferences", std::move(prefs)},
          {"requestText", q.request_text}};
}

std::vector<Query> load_queries(const std::filesystem::path & path)
{
  const std::string text = read_file(path);
  if (trim(text).empty()) throw ParseError("line 1", "empty document");
  const Json j = parse_json(text);
  std::vector<Query> out;
  if (j.is_array()) {
    for (const auto & item : j) out.push_back(query_from_json(item));
  } else {
    out.push_back(query_from_json(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Annotation pairs

AnnotationPair pair_from_json(const Json & j)
{
  const Reader r(j, "", ErrorKind::Parse);
  AnnotationPair p;
  p.pair_id = r.string("pairId");
  p.query_id = r.optional_string("queryId").value_or("");
  if (r.has("scoresA")) p.scores_a = breakdown_from_json(r.required("scoresA"));
  if (r.has("scoresB")) p.scores_b = breakdown_from_json(r.required("scoresB"));
  if (r.has("planA") || !p.scores_a) p.plan_a = itinerary_from_json(r.required("planA"));
  if (r.has("planB") || !p.scores_b) p.plan_b = itinerary_from_json(r.required("planB"));
  const Json & labels = r.array("raterLabels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto l = labels[i].is_string() ? parse_label(labels[i].get<std::string>()) : std::nullopt;
    if (!l) r.fail("raterLabels[" + std::to_string(i) + "]", "expected \"A\", \"B\" or \"neither\"");
    p.rater_labels.push_back(*l);
  }
  if (r.has("majorityLabel")) p.majority_label = r.enumeration<Label>("majorityLabel", parse_label);
  return p;
}

Json pair_to_json(const AnnotationPair & p)
{
  Json labels = Json::array();
  for (const Label l : p.rater_labels) labels.push_back(to_string(l));
  Json j = {{"pairId", p.pair_id}, {"queryId", p.query_id}};
  if (!p.plan_a.days.empty()) j["planA"] = itinerary_to_json(p.plan_a);
  if (!p.plan_b.days.empty()) j["planB"] = itinerary_to_json(p.plan_b);
  j["raterLabels"] = std::move(labels);
  j["majorityLabel"] = p.majority_label ? Json(to_string(*p.majority_label)) : Json(nullptr);
  if (p.scores_a) j["scoresA"] = breakdown_to_json(*p.scores_a);
  if (p.scores_b) j["scoresB"] = breakdown_to_json(*p.scores_b);
  return j;
}

std::vector<AnnotationPair> parse_pairs(std::string_view jsonl)
{
  std::vector<AnnotationPair> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= jsonl.size()) {
    const auto nl = jsonl.find('\n', pos);
    const std::string_view line = jsonl.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (!trim(line).empty()) {
      try {
        out.push_back(pair_from_json(parse_json(line)));
      } catch (const ParseError & e) {
        throw ParseError("line " + std::to_string(line_no), e.what());
      } catch (const SchemaError & e) {
        throw ParseError("line " + std::to_string(line_no), e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<AnnotationPair> load_pairs(const std::filesystem::path & path) { return parse_pairs(read_file(path)); }

std::string serialize_pairs(const std::vector<AnnotationPair> & pairs)
{
  std::string out;
  for (const auto & p : pairs) {
    out += pair_to_json(p).dump();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Breakdown

namespace
{
constexpr std::array<const char *, kSyntheticPrefComponents> kPrefKeys{"budget", "pacing", "attraction", "effort"};
constexpr std::array<const char *, kSoftComponents> kSoftKeys{"schedule", "hotel", "daytime", "unique",
                                                              "clustering", "iconic", "diversity"};
}  // namespace

Json breakdown_to_json(const ScoreBreakdown & b)
{
  Json j = {{"reward", b.reward}, {"formatScore", b.format_score}, {"commonsenseScore", score_or_null(b.commonsense_score)}};
  if (b.soft) {
    const auto v = b.soft->values();
    Json s = Json::object();
    for (std::size_t i = 0; i < kSoftComponents; ++i) s[kSoftKeys[i]] = v[i];
    s["iconicSource"] = to_string(b.soft->iconic_source);
    s["diversitySource"] = to_string(b.soft->diversity_source);
    j["softScores"] = std::move(s);
  } else {
    j["softScores"] = nullptr;
  }
  if (b.pref) {
    Json p = {{"split", to_string(b.pref->split)}};
    if (b.pref->split == Split::Synthetic) {
      for (std::size_t i = 0; i < kSyntheticPrefComponents; ++i) {
        p[kPrefKeys[i]] = {{"score", b.pref->synthetic[i]}, {"applicable", b.pref->applicable[i]}};
      }
    } else {
      p["userRequest"] = {{"score", b.pref->user_request}, {"source", to_string(b.pref->user_request_source)}};
    }
    j["prefScores"] = std::move(p);
  } else {
    j["prefScores"] = nullptr;
  }
  Json vs = Json::array();
  for (const auto & v : b.violations) {
    vs.push_back({{"constraintId", to_string(v.constraint)},
                  {"dayIndex", score_or_null(v.day_index)},
                  {"detail", v.detail}});
  }
  j["violations"] = std::move(vs);
  return j;
}

ScoreBreakdown breakdown_from_json(const Json & j)
{
  const Reader r(j, "", ErrorKind::Parse);
  ScoreBreakdown b;
  b.reward = r.has("reward") ? r.number("reward") : 0.0;
  const auto f = r.integer("formatScore");
  if (f != -3 && f != 1) r.fail("formatScore", "expected -3 or 1");
  b.format_score = static_cast<int>(f);
  if (r.has("commonsenseScore")) {
    const auto c = r.integer("commonsenseScore");
    if (c != -1 && c != 1) r.fail("commonsenseScore", "expected -1 or 1");
    b.commonsense_score = static_cast<int>(c);
  }
  auto unit = [](const Reader & rr, const std::string & key) {
    const double v = rr.number(key);
    if (v < 0.0 || v > 1.0) rr.fail(key, "expected a value in [0,1]");
    return v;
  };
  if (r.has("softScores")) {
    const Reader s = r.object("softScores");
    SoftVector sv;
    sv.schedule = unit(s, "schedule");
    sv.hotel = unit(s, "hotel");
    sv.daytime = unit(s, "daytime");
    sv.unique = unit(s, "unique");
    sv.clustering = unit(s, "clustering");
    sv.iconic = unit(s, "iconic");
    sv.diversity = unit(s, "diversity");
    if (s.has("iconicSource")) sv.iconic_source = s.enumeration<ScoreSource>("iconicSource", parse_score_source);
    if (s.has("diversitySource")) {
      sv.diversity_source = s.enumeration<ScoreSource>("diversitySource", parse_score_source);
    }
    b.soft = sv;
  }
  if (r.has("prefScores")) {
    const Reader p = r.object("prefScores");
    PrefVector pv;
    pv.split = p.enumeration<Split>("split", parse_split);
    if (pv.split == Split::Synthetic) {
      for (std::size_t i = 0; i < kSyntheticPrefComponents; ++i) {
        if (!p.has(kPrefKeys[i])) continue;
        const Reader c = p.object(kPrefKeys[i]);
        pv.synthetic[i] = unit(c, "score");
        const Json & a = c.required("applicable");
        if (!a.is_boolean()) c.fail("applicable", "expected a boolean");
        pv.applicable[i] = a.get<bool>();
      }
    } else {
      const Reader c = p.object("userRequest");
      pv.user_request = unit(c, "score");
      if (c.has("source")) pv.user_request_source = c.enumeration<ScoreSource>("source", parse_score_source);
    }
    b.pref = pv;
  }
  if (r.has("violations")) {
    const Json & vs = r.array("violations");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Reader vr = r.element("violations", i, vs[i]);
      Violation v;
      v.constraint = vr.enumeration<ConstraintId>("constraintId", parse_constraint_id);
      if (vr.has("dayIndex")) v.day_index = static_cast<int>(vr.integer("dayIndex"));
      v.detail = vr.optional_string("detail").value_or("");
      b.violations.push_back(std::move(v));
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Weights

Json weights_to_json(const WeightConfig & w)
{
  Json w1 = Json::object();
  for (std::size_t i = 0; i < kSoftComponents; ++i) w1[kSoftKeys[i]] = w.soft[i];
  Json w2s = Json::object();
  for (std::size_t i = 0; i < kSyntheticPrefComponents; ++i) w2s[kPrefKeys[i]] = w.pref_synthetic[i];
  return {{"w1", std::move(w1)},
          {"w2", {{"synthetic", std::move(w2s)}, {"realWorld", {{"userRequest", w.pref_real_world}}}}},
          {"w3", w.soft_multiplier},
          {"w4", {{"synthetic", w.pref_multiplier_synthetic}, {"realWorld", w.pref_multiplier_real_world}}}};
}

WeightConfig weights_from_json(const Json & j)
{
  const Reader r(j, "", ErrorKind::Parse);
  auto positive = [](const Reader & rr, const std::string & key) {
    const double v = rr.number(key);
    if (!(v > 0.0)) rr.fail(key, "weights must be positive");
    return v;
  };
  WeightConfig w;
  const Reader w1 = r.object("w1");
  for (std::size_t i = 0; i < kSoftComponents; ++i) w.soft[i] = positive(w1, kSoftKeys[i]);
  const Reader w2 = r.object("w2");
  const Reader w2s = w2.object("synthetic");
  for (std::size_t i = 0; i < kSyntheticPrefComponents; ++i) w.pref_synthetic[i] = positive(w2s, kPrefKeys[i]);
  w.pref_real_world = positive(w2.object("realWorld"), "userRequest");
  w.soft_multiplier = positive(r, "w3");
  const Reader w4 = r.object("w4");
  w.pref_multiplier_synthetic = positive(w4, "synthetic");
  w.pref_multiplier_real_world = positive(w4, "realWorld");
  return w;
}

WeightConfig load_weights(const std::filesystem::path & path) { return weights_from_json(parse_json(read_file(path))); }

}  // namespace tripscore
