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


#include "tripscore/cli.hpp"

#include <algorithm>
#include <cctype>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tripscore/calibrate.hpp"
#include "tripscore/errors.hpp"
#include "tripscore/evaluator.hpp"
#include "tripscore/fixtures.hpp"
#include "tripscore/io.hpp"
#include "tripscore/judge.hpp"
#include "tripscore/random.hpp"
#include "tripscore/reward.hpp"
#include "tripscore/service.hpp"
#include "tripscore/stats.hpp"

namespace fs = std::filesystem;

namespace tripscore
{
namespace
{

/// Bad user input; reported on stderr with exit code 2.
class InputError : public Error
{
public:
  using Error::Error;
};

std::string read_input(const std::string & path)
{
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!fs::exists(path)) throw InputError("no such file: " + path);
  return read_file(path);
}

void write_file(const fs::path & path, const std::string & text)
{
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

// Options shared through --config; explicit flags win.
struct Common
{
  std::string config_path;
  std::optional<ServiceConfig> config;

  void load()
  {
    if (config_path.empty() || config) return;
    if (!fs::exists(config_path)) throw InputError("no such file: " + config_path);
    config = load_service_config(config_path);
  }
  std::string catalog(const std::string & flag)
  {
    load();
    if (!flag.empty()) return flag;
    if (config && !config->catalog_path.empty()) return config->catalog_path.string();
    throw InputError("no catalog given (--catalog or config)");
  }
  std::string queries(const std::string & flag)
  {
    load();
    if (!flag.empty()) return flag;
    return config ? config->queries_path.string() : std::string{};
  }
  WeightConfig weights(const std::string & flag)
  {
    load();
    if (!flag.empty()) {
      if (!fs::exists(flag)) throw InputError("no such file: " + flag);
      return load_weights(flag);
    }
    if (config && config->weights_path) return load_weights(*config->weights_path);
    return WeightConfig::optimized();
  }
  Mode mode(const std::string & flag)
  {
    load();
    if (!flag.empty()) {
      const auto m = parse_mode(flag);
      if (!m) throw InputError("--mode must be ruleOnly or full");
      return *m;
    }
    return config ? config->default_mode : Mode::RuleOnly;
  }
  std::optional<JudgeConfig> judge()
  {
    load();
    if (config && config->judge) return config->judge;
    JudgeConfig env = JudgeConfig::from_env();
    if (!env.endpoint_url.empty()) return env;
    return std::nullopt;
  }
};

// Full mode needs a judge: a deterministic offline one when asked for,
// else the configured endpoint.
std::shared_ptr<JudgePort> pick_judge(Common & common, Mode mode, const std::optional<std::string> & mock_salt)
{
  if (mode != Mode::Full) return nullptr;
  if (mock_salt) return mock_judge(*mock_salt);
  const auto cfg = common.judge();
  if (!cfg) throw InputError("full mode needs a judge: set JUDGE_URL, a config judge section, or --mock-judge");
  return http_judge(*cfg);
}

std::map<std::string, Query> query_index(const std::string & path)
{
  std::map<std::string, Query> out;
  if (path.empty()) return out;
  if (!fs::exists(path)) throw InputError("no such file: " + path);
  for (auto & q : load_queries(path)) out.emplace(q.query_id, std::move(q));
  return out;
}

std::string fixed(double v, int digits = 4)
{
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

// ---------------------------------------------------------------------------
// score

struct ScoreArgs
{
  std::string itinerary;
  std::string query;
  std::string query_id;
  std::string catalog;
  std::string weights;
  std::string mode;
  std::string format = "json";
  std::optional<std::string> mock_salt;
};

void print_breakdown_table(const ScoreBreakdown & b, std::ostream & out)
{
  out << "reward            " << fixed(b.reward) << "\n";
  out << "format            " << (b.format_score > 0 ? "pass" : "fail") << "\n";
  out << "commonsense       "
      << (!b.commonsense_score ? "n/a" : *b.commonsense_score > 0 ? "pass" : "fail") << "\n";
  if (b.soft) {
    static constexpr const char * names[] = {"schedule", "hotel", "daytime", "unique", "clustering", "iconic",
                                             "diversity"};
    const auto v = b.soft->values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << "soft." << std::left << std::setw(13) << names[i] << fixed(v[i]) << "\n";
    }
  }
  if (b.pref) {
    if (b.pref->split == Split::Synthetic) {
      static constexpr const char * names[] = {"budget", "pacing", "attraction", "effort"};
      for (std::size_t i = 0; i < 4; ++i) {
        out << "pref." << std::left << std::setw(13) << names[i] << fixed(b.pref->synthetic[i])
            << (b.pref->applicable[i] ? "" : "  (not requested)") << "\n";
      }
    } else {
      out << "pref.userRequest  " << fixed(b.pref->user_request) << "\n";
    }
  }
  out << "violations        " << b.violations.size() << "\n";
  for (const auto & v : b.violations) {
    out << "  " << to_string(v.constraint);
    if (v.day_index) out << " (day " << *v.day_index << ")";
    out << ": " << v.detail << "\n";
  }
}

int cmd_score(const ScoreArgs & a, Common & common, std::ostream & out)
{
  const std::string text = read_input(a.itinerary);
  if (!fs::exists(a.query)) throw InputError("no such file: " + a.query);
  auto queries = load_queries(a.query);
  Query query;
  if (!a.query_id.empty()) {
    const auto it = std::find_if(queries.begin(), queries.end(), [&](const Query & q) { return q.query_id == a.query_id; });
    if (it == queries.end()) throw InputError("query " + a.query_id + " not in " + a.query);
    query = *it;
  } else {
    if (queries.size() != 1) throw InputError("query file holds several queries; pick one with --query-id");
    query = queries.front();
  }
  const std::string catalog_path = common.catalog(a.catalog);
  if (!fs::exists(catalog_path)) throw InputError("no such file: " + catalog_path);
  const ReferenceCatalog catalog = load_catalog(catalog_path);

  EvalOptions options;
  options.mode = common.mode(a.mode);
  options.weights = common.weights(a.weights);
  const auto judge = pick_judge(common, options.mode, a.mock_salt);
  options.judge = judge.get();
  const ScoreBreakdown b = evaluate(text, query, catalog, options);
  if (a.format == "table") {
    print_breakdown_table(b, out);
  } else {
    out << breakdown_to_json(b).dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// batch-score

struct BatchArgs
{
  std::string requests;
  std::string catalog;
  std::string queries;
  std::string weights;
  std::string mode;
  std::string out_dir;
  std::size_t workers = 0;
  std::optional<std::string> mock_salt;
};

int cmd_batch(const BatchArgs & a, Common & common, std::ostream & out, std::ostream & err)
{
  const std::string text = read_input(a.requests);
  std::vector<Json> requests;
  std::istringstream lines(text);
  std::string line;
  for (std::size_t n = 1; std::getline(lines, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      requests.push_back(parse_json(line));
    } catch (const ParseError & e) {
      throw InputError("requests line " + std::to_string(n) + ": " + e.what());
    }
  }
  if (requests.empty()) throw InputError("no requests in " + a.requests);

  const std::string catalog_path = common.catalog(a.catalog);
  if (!fs::exists(catalog_path)) throw InputError("no such file: " + catalog_path);
  std::vector<Query> queries;
  if (const auto qp = common.queries(a.queries); !qp.empty()) {
    if (!fs::exists(qp)) throw InputError("no such file: " + qp);
    queries = load_queries(qp);
  }
  const Mode mode = common.mode(a.mode);
  const ScoringEngine engine(load_catalog(catalog_path), std::move(queries), common.weights(a.weights), mode,
                             pick_judge(common, mode, a.mock_salt), a.workers);

  std::size_t failed = 0;
  for (std::size_t start = 0; start < requests.size(); start += kMaxBatchSize) {
    const std::size_t stop = std::min(requests.size(), start + kMaxBatchSize);
    Json chunk = Json::array();
    for (std::size_t i = start; i < stop; ++i) chunk.push_back(requests[i]);
    Reply reply = engine.score_batch(chunk);
    for (std::size_t i = 0; i < reply.body.size(); ++i) {
      Json & item = reply.body[i];
      const std::size_t index = start + i;
      item.erase("elapsedMs");  // keeps output reproducible
      Json line_out = {{"index", index}};
      if (const auto q = requests[index].find("queryId"); q != requests[index].end()) line_out["queryId"] = *q;
      if (item.contains("error")) {
        ++failed;
        item["error"]["index"] = index;
        line_out["error"] = item["error"];
      } else {
        line_out["reward"] = item["reward"];
        line_out["breakdown"] = item["breakdown"];
        if (!a.out_dir.empty()) {
          std::ostringstream name;
          name << std::setw(5) << std::setfill('0') << index << ".json";
          write_file(fs::path(a.out_dir) / name.str(), item["breakdown"].dump(2) + "\n");
        }
      }
      out << line_out.dump() << "\n";
    }
  }
  err << "scored " << requests.size() - failed << " of " << requests.size() << " requests\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// calibrate

struct CalibrateArgs
{
  std::string pairs;
  std::string grid = "default";
  std::size_t folds = 5;
  std::size_t bootstrap = 1000;
  double level = 0.95;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string catalog;
  std::string queries;
  std::string out;
};

// Fills missing sub-scores by rule-only scoring of both plans.
void score_missing(std::vector<AnnotationPair> & pairs, const ReferenceCatalog & catalog,
                   const std::map<std::string, Query> & queries)
{
  for (auto & p : pairs) {
    if (p.scores_a && p.scores_b) continue;
    const auto q = queries.find(p.query_id);
    if (q == queries.end()) throw InputError("pair " + p.pair_id + " names unknown query " + p.query_id);
    if (!p.scores_a) p.scores_a = evaluate(serialize_itinerary(p.plan_a), q->second, catalog);
    if (!p.scores_b) p.scores_b = evaluate(serialize_itinerary(p.plan_b), q->second, catalog);
  }
}

int cmd_calibrate(const CalibrateArgs & a, Common & common, std::ostream & out, std::ostream & err)
{
  auto pairs = parse_pairs(read_input(a.pairs));
  if (!a.catalog.empty() || !a.queries.empty() || common.config) {
    const auto qp = common.queries(a.queries);
    if (!qp.empty()) {
      const std::string cp = common.catalog(a.catalog);
      if (!fs::exists(cp)) throw InputError("no such file: " + cp);
      score_missing(pairs, load_catalog(cp), query_index(qp));
    }
  }
  const auto labeled = labeled_pairs(pairs);
  if (labeled.size() < 10) {
    throw InputError("calibration needs at least 10 pairs with a majority label and scores; got " +
                     std::to_string(labeled.size()));
  }
  if (a.folds < 2) throw InputError("--cv must be at least 2");
  if (a.folds > labeled.size()) throw InputError("--cv exceeds the number of usable pairs");
  if (!(a.level > 0.0 && a.level < 1.0)) throw InputError("--level must be in (0, 1)");

  CalibrationOptions options;
  if (a.grid != "default") {
    if (!fs::exists(a.grid)) throw InputError("no such file: " + a.grid);
    options.grid = grid_from_json(parse_json(read_file(a.grid)));
  }
  options.folds = a.folds;
  options.bootstrap_iterations = a.bootstrap;
  options.level = a.level;
  options.seed = a.seed;
  options.threads = a.threads;
  err << "calibrating on " << labeled.size() << " pairs over " << options.grid.size() << " grid points\n";
  const std::string report = calibration_to_json(calibrate(labeled, options)).dump(2) + "\n";
  if (!a.out.empty()) write_file(a.out, report);
  out << report;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs
{
  std::string pairs;
  std::string ratings;
  int labels = 3;
  std::optional<double> model_agreement;
  std::string weights;
  std::string catalog;
  std::string queries;
};

// One item per line; labels separated by commas or blanks; '#' starts a comment.
std::vector<std::vector<Label>> parse_ratings(const std::string & text)
{
  std::vector<std::vector<Label>> items;
  std::istringstream lines(text);
  std::string line;
  for (std::size_t n = 1; std::getline(lines, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream words(line);
    std::vector<Label> row;
    for (std::string w; words >> w;) {
      std::string lower = w;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
      const auto l = lower == "neither" ? std::optional<Label>(Label::Neither) : parse_label(w);
      if (!l) throw InputError("ratings line " + std::to_string(n) + ": unknown label '" + w + "'");
      row.push_back(*l);
    }
    if (!row.empty()) items.push_back(std::move(row));
  }
  return items;
}

int cmd_stats(const StatsArgs & a, Common & common, std::ostream & out, std::ostream & err)
{
  if (a.pairs.empty() == a.ratings.empty()) throw InputError("give exactly one of --pairs or --ratings");
  if (a.labels < 2) throw InputError("--labels must be at least 2");
  std::vector<std::vector<Label>> items;
  std::vector<AnnotationPair> pairs;
  if (!a.pairs.empty()) {
    pairs = parse_pairs(read_input(a.pairs));
    if (!a.queries.empty()) score_missing(pairs, load_catalog(common.catalog(a.catalog)), query_index(a.queries));
    for (const auto & p : pairs) items.push_back(p.rater_labels);
  } else {
    items = parse_ratings(read_input(a.ratings));
  }
  if (items.empty()) throw InputError("no rated items");

  std::size_t min_raters = items.front().size();
  std::size_t max_raters = min_raters;
  for (const auto & row : items) {
    min_raters = std::min(min_raters, row.size());
    max_raters = std::max(max_raters, row.size());
  }

  Json report;
  report["items"] = items.size();
  report["raters"] = min_raters == max_raters ? Json(min_raters) : Json{{"min", min_raters}, {"max", max_raters}};
  if (min_raters < 2) {
    err << "Fleiss kappa unavailable: every item needs at least 2 ratings (found an item with " << min_raters
        << ")\n";
    report["meanPairwiseAgreement"] = nullptr;
    report["allAgreeRate"] = nullptr;
    report["cohenKappa"] = nullptr;
    report["fleissKappa"] = nullptr;
    report["noiseModel"] = nullptr;
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  const double a_pair = mean_pairwise_agreement(items);
  report["meanPairwiseAgreement"] = a_pair;
  report["allAgreeRate"] = all_agree_rate(items);
  report["cohenKappa"] = min_raters == max_raters ? Json(mean_pairwise_cohen_kappa(items)) : Json(nullptr);
  if (min_raters == max_raters) {
    report["fleissKappa"] = fleiss_kappa(rating_matrix(items));
  } else {
    err << "Fleiss kappa unavailable: items have different numbers of ratings\n";
    report["fleissKappa"] = nullptr;
  }

  Json noise;
  try {
    const double r = noise_model(a_pair, a.labels);
    noise["labels"] = a.labels;
    noise["r"] = r;
    noise["predictedAllAgree"] = noise_model_all_agree(r, a.labels);
    std::optional<double> a_model = a.model_agreement;
    if (!a_model && !pairs.empty()) {
      const auto labeled = labeled_pairs(pairs);
      if (!labeled.empty()) {
        const WeightConfig w = common.weights(a.weights);
        a_model = pair_agreement(w, labeled);
        report["kendallTau"] = kendall_tau(reward_deltas(labeled, w), [&] {
          std::vector<Label> ls;
          for (const auto & p : labeled) ls.push_back(p.label);
          return ls;
        }());
      }
    }
    if (a_model) {
      const double r_model = noise_model_r_model(*a_model, r, a.labels);
      noise["modelAgreement"] = *a_model;
      noise["rModel"] = r_model;
      noise["ratio"] = r_model / r;
    }
  } catch (const DomainError & e) {
    err << "noise model unavailable: " << e.what() << "\n";
    noise = nullptr;
  }
  report["noiseModel"] = noise;
  out << report.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs
{
  std::string breakdowns;
  std::string weights;
  std::string format = "json";
  std::size_t top = 5;
};

int cmd_report(const ReportArgs & a, Common & common, std::ostream & out)
{
  if (!fs::is_directory(a.breakdowns)) throw InputError("not a directory: " + a.breakdowns);
  std::vector<fs::path> files;
  for (const auto & e : fs::directory_iterator(a.breakdowns)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no breakdown files in " + a.breakdowns);
  std::vector<ScoreBreakdown> corpus;
  for (const auto & f : files) {
    const Json j = parse_json(read_file(f));
    try {
      corpus.push_back(breakdown_from_json(j.contains("breakdown") ? j.at("breakdown") : j));
    } catch (const Error & e) {
      throw InputError(f.string() + ": " + e.what());
    }
  }
  const CorpusMetrics m =
    a.weights.empty() && !common.config ? corpus_metrics(corpus) : corpus_metrics(corpus, common.weights(a.weights));
  const auto hist = violation_histogram(corpus);
  std::vector<std::pair<ConstraintId, std::size_t>> ranked(hist.begin(), hist.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto & x, const auto & y) { return x.second > y.second; });
  std::size_t total = 0;
  for (const auto & [id, n] : ranked) total += n;

  if (a.format == "table") {
    out << "plans             " << m.n << "\n";
    out << "delivery rate     " << fixed(m.delivery_rate) << "\n";
    out << "commonsense pass  " << fixed(m.commonsense_pass_rate) << "\n";
    out << "mean reward       " << fixed(m.mean_reward) << "\n";
    out << "cond. reward      " << (m.cond_reward ? fixed(*m.cond_reward) : "n/a") << "\n";
    out << "violations        " << total << "\n";
    for (std::size_t i = 0; i < ranked.size() && i < a.top; ++i) {
      out << "  " << std::left << std::setw(26) << to_string(ranked[i].first) << ranked[i].second << "\n";
    }
    return kExitOk;
  }
  Json j;
  j["plans"] = m.n;
  j["delivered"] = m.delivered;
  j["commonsensePassed"] = m.commonsense_passed;
  j["deliveryRate"] = m.delivery_rate;
  j["commonsensePassRate"] = m.commonsense_pass_rate;
  j["meanReward"] = m.mean_reward;
  j["condReward"] = m.cond_reward ? Json(*m.cond_reward) : Json(nullptr);
  j["totalViolations"] = total;
  Json h = Json::object();
  for (const auto & [id, n] : ranked) h[std::string(to_string(id))] = n;
  j["violationHistogram"] = std::move(h);
  Json topn = Json::array();
  for (std::size_t i = 0; i < ranked.size() && i < a.top; ++i) topn.push_back(to_string(ranked[i].first));
  j["topViolations"] = std::move(topn);
  out << j.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen-fixtures

struct GenArgs
{
  std::string out_dir;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  int cities = 3;
  int pois = 8;
  int days = 3;
  std::string split = "synthetic";
  std::vector<std::string> plant;
  double plant_rate = 0.0;
};

constexpr std::array<ConstraintId, 10> kPlantable{
  ConstraintId::ResponseFormat,       ConstraintId::InformationVerification, ConstraintId::InformationAccuracy,
  ConstraintId::InformationRelevance, ConstraintId::InformationCompleteness, ConstraintId::ChronologicalOrder,
  ConstraintId::LocationConsistency,  ConstraintId::OperatingHours,          ConstraintId::TravelBlockOut,
  ConstraintId::TransportConsistency};

int cmd_gen(const GenArgs & a, std::ostream & out, std::ostream & err)
{
  const auto split = parse_split(a.split);
  if (!split) throw InputError("--split must be synthetic or realWorld");
  if (a.count == 0) throw InputError("--count must be positive");
  if (a.plant_rate < 0.0 || a.plant_rate > 1.0) throw InputError("--plant-rate must be in [0, 1]");
  std::vector<ConstraintId> fixed_plants;
  for (const auto & p : a.plant) {
    const auto id = parse_constraint_id(p);
    if (!id) throw InputError("unknown constraint id " + p);
    fixed_plants.push_back(*id);
  }

  const fs::path dir(a.out_dir);
  Json queries = Json::array();
  std::string requests;
  std::optional<ReferenceCatalog> catalog;
  SplitMix64 rng(a.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < a.count; ++i) {
    FixtureSpec spec;
    spec.seed = a.seed + i;
    spec.catalog_seed = a.seed;
    spec.cities_count = a.cities;
    spec.pois_per_city = a.pois;
    spec.duration_days = a.days;
    spec.split = *split;
    spec.planted = fixed_plants;
    if (a.plant_rate > 0.0 && rng.chance(a.plant_rate)) {
      const ConstraintId extra = kPlantable[rng.below(kPlantable.size())];
      if (std::find(spec.planted.begin(), spec.planted.end(), extra) == spec.planted.end()) {
        spec.planted.push_back(extra);
      }
    }
    Fixture fx;
    try {
      fx = generate_fixture(spec);
    } catch (const UnsupportedViolation & e) {
      throw InputError(std::string("fixture ") + std::to_string(spec.seed) + ": " + e.what());
    } catch (const PreconditionError & e) {
      throw InputError(e.what());
    }
    if (!catalog) catalog = fx.catalog;
    const std::string & id = fx.query.query_id;
    write_file(dir / "itineraries" / (id + ".json"), fx.itinerary_text + "\n");
    write_file(dir / "manifests" / (id + ".json"), manifest_to_json(fx).dump(2) + "\n");
    queries.push_back(query_to_json(fx.query));
    requests += Json{{"queryId", id}, {"itinerary", fx.itinerary_text}, {"mode", "ruleOnly"}}.dump() + "\n";
  }
  write_file(dir / "catalog.json", catalog_to_json(*catalog).dump(2) + "\n");
  write_file(dir / "queries.json", queries.dump(2) + "\n");
  write_file(dir / "requests.jsonl", requests);
  err << "wrote " << a.count << " fixtures to " << dir.string() << "\n";
  out << Json{{"fixtures", a.count}, {"dir", dir.string()}}.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// serve

struct ServeArgs
{
  std::string host;
  int port = -1;
  std::string catalog;
  std::string queries;
  std::string weights;
  std::string mode;
  std::size_t workers = 0;
  std::string token;
};

int cmd_serve(const ServeArgs & a, Common & common, std::ostream & err)
{
  common.load();
  ServiceConfig cfg = common.config.value_or(ServiceConfig{});
  cfg.apply_env();
  if (!a.host.empty()) cfg.host = a.host;
  if (a.port >= 0) cfg.port = a.port;
  if (!a.catalog.empty()) cfg.catalog_path = a.catalog;
  if (!a.queries.empty()) cfg.queries_path = a.queries;
  if (!a.weights.empty()) cfg.weights_path = a.weights;
  if (!a.mode.empty()) cfg.default_mode = common.mode(a.mode);
  if (a.workers > 0) cfg.workers = a.workers;
  if (!a.token.empty()) cfg.bearer_token = a.token;
  if (!cfg.judge) {
    JudgeConfig env = JudgeConfig::from_env();
    if (!env.endpoint_url.empty()) cfg.judge = env;
  }
  if (cfg.catalog_path.empty()) throw InputError("no catalog given (--catalog, config or TRIPSCORE_CATALOG)");
  if (!fs::exists(cfg.catalog_path)) throw InputError("no such file: " + cfg.catalog_path.string());

  // Fail fast: any load error ends the process before the port opens.
  const auto engine = make_engine(cfg);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  ScoringService service(*engine, cfg.bearer_token, cfg.workers);
  const int port = service.start(cfg.host, cfg.port);
  const auto health = engine->health();
  err << "tripscore " << engine_version() << " listening on " << cfg.host << ":" << port << " ("
      << health["catalogCounts"].dump() << ")\n";
  int sig = 0;
  sigwait(&signals, &sig);
  err << "shutting down\n";
  service.stop();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Rule-based itinerary scoring and reward calibration", "tripscore"};
  app.set_version_flag("--version", std::string(engine_version()));
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config_path, "JSON config file; explicit flags win");

  ScoreArgs sa;
  auto * score = app.add_subcommand("score", "Score one itinerary");
  score->add_option("--itinerary", sa.itinerary, "Itinerary JSON file, or - for stdin")->required();
  score->add_option("--query", sa.query, "Query JSON file (object or array)")->required();
  score->add_option("--query-id", sa.query_id, "Pick a query from an array file");
  score->add_option("--catalog", sa.catalog, "Reference catalog JSON file");
  score->add_option("--weights", sa.weights, "Weight config JSON file");
  score->add_option("--mode", sa.mode, "ruleOnly (default) or full");
  score->add_option("--format", sa.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  score->add_option("--mock-judge", sa.mock_salt, "Use the offline deterministic judge with this salt in full mode");

  BatchArgs ba;
  auto * batch = app.add_subcommand("batch-score", "Score a JSON-lines file of score requests");
  batch->add_option("--requests", ba.requests, "JSON-lines score requests, or - for stdin")->required();
  batch->add_option("--catalog", ba.catalog, "Reference catalog JSON file");
  batch->add_option("--queries", ba.queries, "Query file resolving queryId");
  batch->add_option("--weights", ba.weights, "Weight config JSON file");
  batch->add_option("--mode", ba.mode, "Default mode for requests without one");
  batch->add_option("--workers", ba.workers, "Worker threads (0: all cores)");
  batch->add_option("--out-dir", ba.out_dir, "Also write one breakdown file per request here");
  batch->add_option("--mock-judge", ba.mock_salt, "Use the offline deterministic judge with this salt in full mode");

  CalibrateArgs ca;
  auto * cal = app.add_subcommand("calibrate", "Grid-search weights against labeled pairs");
  cal->add_option("--pairs", ca.pairs, "Annotation pairs, JSON lines")->required();
  cal->add_option("--grid", ca.grid, "default, or a grid JSON file");
  cal->add_option("--cv", ca.folds, "Cross-validation folds");
  cal->add_option("--bootstrap", ca.bootstrap, "Bootstrap resamples");
  cal->add_option("--level", ca.level, "Bootstrap interval level");
  cal->add_option("--seed", ca.seed, "Seed for fold assignment and resampling");
  cal->add_option("--threads", ca.threads, "Grid-search threads (0: all cores)");
  cal->add_option("--catalog", ca.catalog, "Catalog for scoring pairs without scores");
  cal->add_option("--queries", ca.queries, "Queries for scoring pairs without scores");
  cal->add_option("--out", ca.out, "Also write the report to this file");

  StatsArgs st;
  auto * stats = app.add_subcommand("stats", "Inter-rater agreement and noise-model report");
  stats->add_option("--pairs", st.pairs, "Annotation pairs, JSON lines");
  stats->add_option("--ratings", st.ratings, "Ratings text file, one item per line");
  stats->add_option("--labels", st.labels, "Number of label categories");
  stats->add_option("--model-agreement", st.model_agreement, "Model-vs-majority agreement for the model noise rate");
  stats->add_option("--weights", st.weights, "Weights for model agreement on scored pairs");
  stats->add_option("--catalog", st.catalog, "Catalog for scoring pairs without scores");
  stats->add_option("--queries", st.queries, "Queries for scoring pairs without scores");

  ReportArgs ra;
  auto * report = app.add_subcommand("report", "Corpus metrics and violation histogram");
  report->add_option("--breakdowns", ra.breakdowns, "Directory of breakdown JSON files")->required();
  report->add_option("--weights", ra.weights, "Recompute rewards with these weights");
  report->add_option("--format", ra.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  report->add_option("--top", ra.top, "How many constraints to rank");

  GenArgs ga;
  auto * gen = app.add_subcommand("gen-fixtures", "Generate seeded test fixtures");
  gen->add_option("--out", ga.out_dir, "Output directory")->required();
  gen->add_option("--count", ga.count, "Number of fixtures");
  gen->add_option("--seed", ga.seed, "Base seed; also the shared catalog seed");
  gen->add_option("--cities", ga.cities, "Cities including the origin");
  gen->add_option("--pois", ga.pois, "Attractions per city");
  gen->add_option("--days", ga.days, "Trip length in days");
  gen->add_option("--split", ga.split, "synthetic or realWorld");
  gen->add_option("--plant", ga.plant, "Constraint id to violate in every fixture (repeatable)");
  gen->add_option("--plant-rate", ga.plant_rate, "Chance of one extra random violation per fixture");

  ServeArgs sv;
  auto * serve = app.add_subcommand("serve", "Run the HTTP scoring service");
  serve->add_option("--host", sv.host, "Bind address");
  serve->add_option("--port", sv.port, "Port (0 picks a free one)");
  serve->add_option("--catalog", sv.catalog, "Reference catalog JSON file");
  serve->add_option("--queries", sv.queries, "Query file");
  serve->add_option("--weights", sv.weights, "Weight config JSON file");
  serve->add_option("--mode", sv.mode, "Default mode");
  serve->add_option("--workers", sv.workers, "HTTP and batch worker threads");
  serve->add_option("--token", sv.token, "Require this bearer token");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp & e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion & e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError & e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*score) return cmd_score(sa, common, out);
    if (*batch) return cmd_batch(ba, common, out, err);
    if (*cal) return cmd_calibrate(ca, common, out, err);
    if (*stats) return cmd_stats(st, common, out, err);
    if (*report) return cmd_report(ra, common, out);
    if (*gen) return cmd_gen(ga, out, err);
    if (*serve) return cmd_serve(sv, common, err);
  } catch (const JudgeUnavailable & e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const JudgeMalformedResponse & e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace tripscore
