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

#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>

#include "tripscore/io.hpp"
#include "tripscore/random.hpp"
#include "tripscore/reward.hpp"
#include "tripscore/text.hpp"

namespace tripscore::testing
{

std::set<ConstraintId> constraint_ids(const std::vector<Violation> & violations)
{
  std::set<ConstraintId> out;
  for (const auto & v : violations) out.insert(v.constraint);
  return out;
}

ScoreBreakdown score_fixture(const Fixture & fixture, const EvalOptions & options)
{
  return evaluate(fixture.itinerary_text, fixture.query, fixture.catalog, options);
}

Activity poi(const std::string & id, const std::string & name) { return {ActivityKind::Poi, id, name, {}, {}}; }
Activity external_poi(const std::string & name) { return {ActivityKind::Poi, "", name, {}, {}}; }
Activity hotel(const std::string & id, const std::string & name) { return {ActivityKind::Hotel, id, name, {}, {}}; }
Activity leg(const std::string & id, const std::string & number)
{
  return {ActivityKind::Transportation, id, number, {}, {}};
}

PeriodBlock block(Period period, std::vector<Activity> activities)
{
  PeriodBlock b{period, "", std::move(activities), {}};
  for (const auto & a : b.activities) {
    b.description += a.id.empty() ? "See **[" + a.name + "]**. " : "See **[" + a.name + "](" + a.id + ")**. ";
  }
  if (b.description.empty()) b.description = "Free time.";
  b.links = extract_links(b.description);
  return b;
}

DayPlan day(int index, std::vector<PeriodBlock> blocks)
{
  return {index, "Day " + std::to_string(index), std::move(blocks)};
}

Itinerary plan(std::vector<DayPlan> days) { return {"Test plan", "Because.", std::move(days), std::nullopt}; }

Poi make_poi(const std::string & id, const std::string & name, const std::string & city, GeoPoint at,
             std::optional<double> hours)
{
  Poi p;
  p.id = id;
  p.name = name;
  p.city = city;
  p.location = at;
  p.recommended_duration_hours = hours;
  return p;
}

Hotel make_hotel(const std::string & id, const std::string & city, int stars, GeoPoint at)
{
  return {id, city + " Hotel " + id, city, stars, at};
}

TransportLeg make_leg(const std::string & id, const std::string & from, const std::string & to, const std::string & depart,
                      const std::string & arrive)
{
  return {id, "N" + id, TransportMode::Train, from, to, at(depart), at(arrive)};
}

Date date(const std::string & text) { return parse_date(text).value(); }
DateTime at(const std::string & text) { return parse_datetime(text).value(); }

namespace
{

double naive_haversine(GeoPoint a, GeoPoint b)
{
  constexpr double kPi = 3.14159265358979323846;
  const double rad = kPi / 180.0;
  const double s1 = std::sin((b.lat - a.lat) * rad / 2.0);
  const double s2 = std::sin((b.lon - a.lon) * rad / 2.0);
  const double h = s1 * s1 + std::cos(a.lat * rad) * std::cos(b.lat * rad) * s2 * s2;
  return 2.0 * 6371.0088 * std::asin(std::sqrt(std::min(1.0, h)));
}

std::vector<const Activity *> flat(const DayPlan & d)
{
  std::vector<const Activity *> out;
  for (const auto & b : d.blocks) {
    for (const auto & a : b.activities) out.push_back(&a);
  }
  return out;
}

}  // namespace

SoftOracle oracle_soft(const Itinerary & it, const ReferenceCatalog & catalog)
{
  SoftOracle o{};
  const double D = static_cast<double>(it.days.size());

  // schedule density
  int bad = 0;
  for (const auto & d : it.days) {
    long mins = 0;
    bool travel = false;
    for (const Activity * a : flat(d)) {
      if (a->kind == ActivityKind::Transportation) travel = true;
      if (a->kind == ActivityKind::Poi && a->resolved_start) mins += (*a->resolved_end - *a->resolved_start).count();
    }
    const double h = mins / 60.0;
    const double lo = travel ? 2.0 : 4.0;
    if (h < lo || h > 10.0) ++bad;
  }
  o.schedule = D == 0 ? 1.0 : 1.0 - bad / D;

  // hotel consistency
  std::vector<std::string> nights;
  for (const auto & d : it.days) {
    std::string last;
    for (const Activity * a : flat(d)) {
      if (a->kind == ActivityKind::Hotel) last = a->id;
    }
    if (!last.empty()) nights.push_back(last);
  }
  int switches = 0;
  for (std::size_t i = 1; i < nights.size(); ++i) {
    const Hotel * a = catalog.find_hotel(nights[i - 1]);
    const Hotel * b = catalog.find_hotel(nights[i]);
    if (a && b && a->id != b->id && a->city == b->city && naive_haversine(a->location, b->location) <= 100.0) {
      ++switches;
    }
  }
  o.hotel = nights.empty() ? 1.0 : 1.0 - static_cast<double>(switches) / nights.size();

  // daytime utilization: minute bitmap over 08:00-18:00
  bad = 0;
  for (const auto & d : it.days) {
    bool poi_by_day = false;
    std::vector<bool> busy(600, false);
    std::optional<Date> day_date;
    for (const auto & b : d.blocks) {
      for (const auto & a : b.activities) {
        if (a.kind == ActivityKind::Poi && b.period != Period::Evening) poi_by_day = true;
        if (a.kind == ActivityKind::Transportation && a.resolved_start) {
          if (!day_date) day_date = date_of(*a.resolved_start);
          const DateTime base = DateTime{*day_date} + std::chrono::hours{8};
          for (int m = 0; m < 600; ++m) {
            const DateTime t = base + std::chrono::minutes{m};
            if (t >= *a.resolved_start && t < *a.resolved_end) busy[m] = true;
          }
        }
      }
    }
    if (poi_by_day) continue;
    const auto covered = std::count(busy.begin(), busy.end(), true);
    if (covered < 360) ++bad;
  }
  o.daytime = D == 0 ? 1.0 : 1.0 - bad / D;

  // unique attractions
  std::vector<std::string> merged;
  int total = 0;
  for (const auto & d : it.days) {
    const auto acts = flat(d);
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const Activity * a = acts[i];
      if (a->kind != ActivityKind::Poi) continue;
      ++total;
      const std::string key = a->id.empty() ? "ext:" + normalize_name(a->name) : "id:" + a->id;
      if (i > 0 && acts[i - 1]->kind == ActivityKind::Poi) {
        const Activity * p = acts[i - 1];
        const std::string pkey = p->id.empty() ? "ext:" + normalize_name(p->name) : "id:" + p->id;
        if (pkey == key) continue;
      }
      merged.push_back(key);
    }
  }
  if (total == 0) {
    o.unique = 1.0;
  } else {
    double dup = 0.0;
    double excess = 0.0;
    std::vector<std::string> done;
    for (const auto & k : merged) {
      if (std::find(done.begin(), done.end(), k) != done.end()) continue;
      done.push_back(k);
      const auto n = std::count(merged.begin(), merged.end(), k);
      if (n >= 2) {
        dup += 1;
        excess += static_cast<double>((n - 1) * (n - 1));
      }
    }
    o.unique = std::max(0.0, 1.0 - dup / total - excess * 0.05 / total);
  }

  // clustering
  std::vector<double> hops;
  for (const auto & d : it.days) {
    const Poi * prev = nullptr;
    for (const Activity * a : flat(d)) {
      if (a->kind != ActivityKind::Poi || a->id.empty()) continue;
      const Poi * p = catalog.find_poi(a->id);
      if (!p) continue;
      if (prev) hops.push_back(naive_haversine(prev->location, p->location));
      prev = p;
    }
  }
  if (hops.size() < 5) {
    o.clustering = 1.0;
  } else {
    std::size_t need = 0;
    while (5 * need < 4 * hops.size()) ++need;  // ceil(0.8 n)
    double threshold = 0.0;
    bool found = false;
    for (const double v : hops) {
      const auto at_most = static_cast<std::size_t>(std::count_if(hops.begin(), hops.end(), [v](double x) { return x <= v; }));
      if (at_most >= need && (!found || v < threshold)) {
        threshold = v;
        found = true;
      }
    }
    const auto above = std::count_if(hops.begin(), hops.end(), [threshold](double x) { return x > threshold; });
    o.clustering = std::max(0.0, 1.0 - static_cast<double>(above) / total);
  }
  return o;
}

Itinerary fuzz_itinerary(std::uint64_t seed, const ReferenceCatalog & catalog)
{
  SplitMix64 rng(seed);
  std::vector<const Poi *> pois;
  for (const auto & [id, p] : catalog.pois) pois.push_back(&p);
  std::vector<const Hotel *> hotels;
  for (const auto & [id, h] : catalog.hotels) hotels.push_back(&h);
  std::vector<const TransportLeg *> legs;
  for (const auto & [id, l] : catalog.transports) legs.push_back(&l);

  std::vector<DayPlan> days;
  const int n_days = 1 + static_cast<int>(rng.below(5));
  for (int d = 1; d <= n_days; ++d) {
    std::vector<PeriodBlock> blocks;
    for (const Period p : {Period::Morning, Period::Afternoon, Period::Evening}) {
      if (rng.chance(0.2)) continue;
      std::vector<Activity> acts;
      const auto n = rng.below(5);
      for (std::uint64_t i = 0; i < n; ++i) {
        const auto r = rng.below(10);
        if (r < 5) {
          const Poi * x = pois[rng.below(pois.size())];
          acts.push_back(poi(x->id, x->name));
        } else if (r == 5 && !acts.empty()) {
          acts.push_back(acts.back());  // back-to-back repeat
        } else if (r == 6) {
          acts.push_back(external_poi("Street Corner " + std::to_string(rng.below(3))));
        } else if (r == 7) {
          const Hotel * h = hotels[rng.below(hotels.size())];
          acts.push_back(hotel(h->id, h->name));
        } else {
          const TransportLeg * l = legs[rng.below(legs.size())];
          acts.push_back(leg(l->id, l->number));
        }
      }
      blocks.push_back(block(p, std::move(acts)));
    }
    if (blocks.empty()) blocks.push_back(block(Period::Afternoon, {}));
    days.push_back(day(d, std::move(blocks)));
  }
  return plan(std::move(days));
}

GoldenCase max_reward_case(Split split)
{
  const std::filesystem::path dir{TRIPSCORE_GOLDEN_DIR};
  GoldenCase c;
  c.text = read_file(dir / "itinerary.json");
  c.catalog = load_catalog(dir / "catalog.json");
  c.query = load_queries(dir / "query.json").front();
  c.query.split = split;
  c.query.preferences.pacing = Pacing::Relaxed;
  c.query.preferences.attraction_tags.reset();
  return c;
}

ScoreBreakdown random_clean_breakdown(SplitMix64 & rng, Split split)
{
  ScoreBreakdown b;
  b.format_score = 1;
  b.commonsense_score = 1;
  SoftVector s;
  s.schedule = rng.unit();
  s.hotel = rng.unit();
  s.daytime = rng.unit();
  s.unique = rng.unit();
  s.clustering = rng.unit();
  s.iconic = static_cast<double>(rng.below(5)) / 4.0;
  s.diversity = static_cast<double>(rng.below(5)) / 4.0;
  b.soft = s;
  PrefVector p;
  p.split = split;
  for (std::size_t i = 0; i < p.synthetic.size(); ++i) {
    p.synthetic[i] = rng.unit();
    p.applicable[i] = true;
  }
  p.user_request = static_cast<double>(rng.below(6)) / 5.0;
  b.pref = p;
  return b;
}

std::vector<LabeledPair> planted_pairs(std::size_t n, const WeightConfig & theta, double noise, std::uint64_t seed,
                                       double gated_share)
{
  SplitMix64 rng(seed);
  std::vector<LabeledPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledPair p;
    p.pair_id = "p" + std::to_string(i);
    p.a = random_clean_breakdown(rng);
    p.b = random_clean_breakdown(rng);
    if (rng.chance(gated_share)) {
      ScoreBreakdown & g = rng.chance(0.5) ? p.a : p.b;
      g.commonsense_score = -1;
    }
    p.a.reward = aggregate(p.a, theta);
    p.b.reward = aggregate(p.b, theta);
    p.label = predict(p.a.reward, p.b.reward);
    if (rng.chance(noise)) {
      const Label all[] = {Label::A, Label::B, Label::Neither};
      Label other = p.label;
      while (other == p.label) other = all[rng.below(3)];
      p.label = other;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Agreement counted pair by pair over items.
double brute_cohen_kappa(const std::vector<int> & a, const std::vector<int> & b)
{
  const double n = static_cast<double>(a.size());
  std::set<int> cats(a.begin(), a.end());
  cats.insert(b.begin(), b.end());
  double po = 0;
  for (std::size_t i = 0; i < a.size(); ++i) po += a[i] == b[i];
  po /= n;
  double pe = 0;
  for (int c : cats) {
    double ca = 0, cb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ca += a[i] == c;
      cb += b[i] == c;
    }
    pe += (ca / n) * (cb / n);
  }
  if (pe == 1.0) return 1.0;
  return (po - pe) / (1.0 - pe);
}

// Expands each row into individual ratings and counts agreeing ordered pairs.
double brute_fleiss_kappa(const std::vector<std::vector<std::size_t>> & counts)
{
  const std::size_t k = counts.front().size();
  double p_bar = 0;
  std::vector<double> share(k, 0.0);
  double total = 0;
  for (const auto & row : counts) {
    std::vector<std::size_t> ratings;
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < row[c]; ++r) ratings.push_back(c);
    double agree = 0, pairs = 0;
    for (std::size_t i = 0; i < ratings.size(); ++i)
      for (std::size_t j = 0; j < ratings.size(); ++j) {
        if (i == j) continue;
        pairs += 1;
        agree += ratings[i] == ratings[j];
      }
    p_bar += agree / pairs;
    for (std::size_t c : ratings) share[c] += 1;
    total += static_cast<double>(ratings.size());
  }
  p_bar /= static_cast<double>(counts.size());
  double pe = 0;
  for (double s : share) pe += (s / total) * (s / total);
  if (pe == 1.0) return 1.0;
  return (p_bar - pe) / (1.0 - pe);
}

double brute_tau_b(const std::vector<double> & x, const std::vector<double> & y)
{
  double conc = 0, disc = 0, tx = 0, ty = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        tx += 1;
      } else if (dy == 0) {
        ty += 1;
      } else if ((dx > 0) == (dy > 0)) {
        conc += 1;
      } else {
        disc += 1;
      }
    }
  const double denom = std::sqrt((conc + disc + tx) * (conc + disc + ty));
  return denom == 0 ? 0.0 : (conc - disc) / denom;
}

}  // namespace tripscore::testing
