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


#include "tripscore/service.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <vector>

#include <httplib.h>

#include "tripscore/errors.hpp"

namespace tripscore
{
namespace
{

Json error_body(int status, std::string_view code, const std::string & message)
{
  return {{"error", {{"status", status}, {"code", code}, {"message", message}}}};
}

Reply fail(int status, std::string_view code, const std::string & message)
{
  return {status, error_body(status, code, message)};
}

std::size_t resolve_workers(std::size_t n)
{
  if (n > 0) return n;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::filesystem::path resolve_path(const std::filesystem::path & base, const std::string & p)
{
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

const Json * member(const Json & j, const char * key)
{
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string config_string(const Json & j, const char * key, const std::string & path)
{
  const Json * v = member(j, key);
  if (v == nullptr) return {};
  if (!v->is_string()) throw SchemaError(path + key, "expected a string");
  return v->get<std::string>();
}

long config_int(const Json & j, const char * key, const std::string & path, long fallback)
{
  const Json * v = member(j, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer()) throw SchemaError(path + key, "expected an integer");
  return v->get<long>();
}

}  // namespace

std::string_view engine_version() { return TRIPSCORE_ENGINE_VERSION; }

ServiceConfig ServiceConfig::from_json(const Json & j, const std::filesystem::path & base_dir)
{
  if (!j.is_object()) throw SchemaError("", "service config must be an object");
  ServiceConfig c;
  if (const auto host = config_string(j, "host", ""); !host.empty()) c.host = host;
  c.port = static_cast<int>(config_int(j, "port", "", c.port));
  if (c.port < 0 || c.port > 65535) throw SchemaError("port", "out of range");
  if (const auto p = config_string(j, "catalog", ""); !p.empty()) c.catalog_path = resolve_path(base_dir, p);
  if (const auto p = config_string(j, "queries", ""); !p.empty()) c.queries_path = resolve_path(base_dir, p);
  if (const auto p = config_string(j, "weights", ""); !p.empty()) c.weights_path = resolve_path(base_dir, p);
  if (const auto m = config_string(j, "mode", ""); !m.empty()) {
    const auto mode = parse_mode(m);
    if (!mode) throw SchemaError("mode", "expected ruleOnly or full");
    c.default_mode = *mode;
  }
  const long workers = config_int(j, "workers", "", 0);
  if (workers < 0) throw SchemaError("workers", "must be >= 0");
  c.workers = static_cast<std::size_t>(workers);
  if (const auto t = config_string(j, "bearerToken", ""); !t.empty()) c.bearer_token = t;
  if (const Json * judge = member(j, "judge")) {
    if (!judge->is_object()) throw SchemaError("judge", "expected an object");
    JudgeConfig jc = JudgeConfig::from_env();
    if (auto u = config_string(*judge, "endpointURL", "judge."); !u.empty()) jc.endpoint_url = u;
    if (auto m = config_string(*judge, "modelName", "judge."); !m.empty()) jc.model = m;
    if (const Json * t = member(*judge, "timeoutSeconds")) {
      if (!t->is_number() || !(t->get<double>() > 0)) throw SchemaError("judge.timeoutSeconds", "must be positive");
      jc.timeout_seconds = t->get<double>();
    }
    jc.max_retries = static_cast<int>(config_int(*judge, "maxRetries", "judge.", jc.max_retries));
    if (jc.max_retries < 0) throw SchemaError("judge.maxRetries", "must be >= 0");
    if (const Json * o = member(*judge, "promptTemplateOverrides")) {
      if (!o->is_object()) throw SchemaError("judge.promptTemplateOverrides", "expected an object");
      for (const auto & [k, v] : o->items()) {
        if (!v.is_string()) throw SchemaError("judge.promptTemplateOverrides." + k, "expected a string");
        jc.template_overrides[k] = v.get<std::string>();
      }
    }
    const long cap = config_int(*judge, "inflightCap", "judge.", 8);
    if (cap < 1) throw SchemaError("judge.inflightCap", "must be >= 1");
    c.judge_inflight_cap = static_cast<std::size_t>(cap);
    c.judge = std::move(jc);
  }
  return c;
}

void ServiceConfig::apply_env()
{
  if (const char * p = std::getenv("TRIPSCORE_PORT"); p != nullptr && *p != '\0') {
    char * end = nullptr;
    const long v = std::strtol(p, &end, 10);
    if (*end != '\0' || v < 0 || v > 65535) throw SchemaError("TRIPSCORE_PORT", "not a port number");
    port = static_cast<int>(v);
  }
  if (const char * c = std::getenv("TRIPSCORE_CATALOG"); c != nullptr && *c != '\0') catalog_path = c;
}

ServiceConfig load_service_config(const std::filesystem::path & path)
{
  return ServiceConfig::from_json(parse_json(read_file(path)), path.parent_path());
}

// ---------------------------------------------------------------------------
// Engine

ScoringEngine::ScoringEngine(ReferenceCatalog catalog, std::vector<Query> queries, WeightConfig weights,
                             Mode default_mode, std::shared_ptr<JudgePort> judge, std::size_t workers)
: catalog_(std::move(catalog)),
  weights_(weights),
  default_mode_(default_mode),
  judge_(std::move(judge)),
  workers_(resolve_workers(workers))
{
  for (auto & q : queries) {
    const std::string id = q.query_id;
    if (!queries_.emplace(id, std::move(q)).second) throw DuplicateIdError("duplicate queryId " + id);
  }
}

Reply ScoringEngine::score_body(std::string_view body) const
{
  Json request;
  try {
    request = parse_json(body);
  } catch (const Error & e) {
    return fail(400, "BadRequest", e.what());
  }
  return score(request);
}

Reply ScoringEngine::score(const Json & request) const { return score_one(request); }

Reply ScoringEngine::score_one(const Json & request) const
{
  const auto t0 = std::chrono::steady_clock::now();
  if (!request.is_object()) return fail(400, "BadRequest", "score request must be a JSON object");

  std::string text;
  const Json * itinerary = member(request, "itinerary");
  if (itinerary == nullptr) return fail(400, "BadRequest", "missing itinerary");
  if (itinerary->is_string()) {
    text = itinerary->get<std::string>();
  } else if (itinerary->is_object()) {
    text = itinerary->dump(2);
  } else {
    return fail(400, "BadRequest", "itinerary must be text or an object");
  }

  Query inline_query;
  const Query * query = nullptr;
  if (const Json * id = member(request, "queryId")) {
    if (!id->is_string()) return fail(400, "BadRequest", "queryId must be a string");
    const auto it = queries_.find(id->get<std::string>());
    if (it == queries_.end()) return fail(404, "UnknownQuery", "unknown queryId " + id->get<std::string>());
    query = &it->second;
  } else if (const Json * q = member(request, "query")) {
    try {
      inline_query = query_from_json(*q);
    } catch (const Error & e) {
      return fail(400, "BadRequest", e.what());
    }
    query = &inline_query;
  } else {
    return fail(400, "BadRequest", "missing queryId or query");
  }

  EvalOptions options;
  options.mode = default_mode_;
  options.weights = weights_;
  if (const Json * m = member(request, "mode")) {
    const auto mode = m->is_string() ? parse_mode(m->get<std::string>()) : std::nullopt;
    if (!mode) return fail(400, "BadRequest", "mode must be ruleOnly or full");
    options.mode = *mode;
  }
  if (const Json * w = member(request, "weightsOverride")) {
    try {
      options.weights = weights_from_json(*w);
    } catch (const Error & e) {
      return fail(400, "BadRequest", e.what());
    }
  }
  if (options.mode == Mode::Full) {
    if (!judge_) return fail(503, "JudgeUnavailable", "full mode requested but no judge is configured");
    options.judge = judge_.get();
  }

  ScoreBreakdown breakdown;
  try {
    breakdown = evaluate(text, *query, catalog_, options);
  } catch (const JudgeUnavailable & e) {
    return fail(503, "JudgeUnavailable", e.what());
  } catch (const JudgeMalformedResponse & e) {
    return fail(503, "JudgeUnavailable", e.what());
  } catch (const Error & e) {
    return fail(400, "BadRequest", e.what());
  }

  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  Json body;
  body["reward"] = breakdown.reward;
  body["breakdown"] = breakdown_to_json(breakdown);
  body["engineVersion"] = engine_version();
  body["elapsedMs"] = static_cast<double>(us.count()) / 1000.0;
  return {200, std::move(body)};
}

Reply ScoringEngine::score_batch_body(std::string_view body) const
{
  Json requests;
  try {
    requests = parse_json(body);
  } catch (const Error & e) {
    return fail(400, "BadRequest", e.what());
  }
  return score_batch(requests);
}

Reply ScoringEngine::score_batch(const Json & requests) const
{
  const Json * items = &requests;
  if (requests.is_object()) items = member(requests, "requests");
  if (items == nullptr || !items->is_array()) return fail(400, "BadRequest", "batch body must be an array of requests");
  if (items->size() > kMaxBatchSize) {
    return fail(413, "BatchTooLarge",
                "batch holds " + std::to_string(items->size()) + " items; the cap is " + std::to_string(kMaxBatchSize));
  }

  const std::size_t n = items->size();
  std::vector<Json> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      Reply r = score_one((*items)[i]);
      if (r.status != 200) r.body["error"]["index"] = i;
      out[i] = std::move(r.body);
    }
  };
  const std::size_t threads = std::min(workers_, n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto & t : pool) t.join();

  Json arr = Json::array();
  for (auto & j : out) arr.push_back(std::move(j));
  return {200, std::move(arr)};
}

Json ScoringEngine::health() const
{
  return {{"status", "ok"},
          {"catalogCounts",
           {{"pois", catalog_.pois.size()}, {"hotels", catalog_.hotels.size()}, {"transports", catalog_.transports.size()}}},
          {"queries", queries_.size()},
          {"engineVersion", engine_version()}};
}

std::unique_ptr<ScoringEngine> make_engine(const ServiceConfig & config)
{
  if (config.catalog_path.empty()) throw PreconditionError("no catalog configured");
  ReferenceCatalog catalog = load_catalog(config.catalog_path);
  std::vector<Query> queries;
  if (!config.queries_path.empty()) queries = load_queries(config.queries_path);
  const WeightConfig weights = config.weights_path ? load_weights(*config.weights_path) : WeightConfig::optimized();
  std::shared_ptr<JudgePort> judge;
  if (config.judge) {
    set_judge_inflight_cap(config.judge_inflight_cap);
    judge = http_judge(*config.judge);
  }
  return std::make_unique<ScoringEngine>(std::move(catalog), std::move(queries), weights, config.default_mode,
                                         std::move(judge), config.workers);
}

// ---------------------------------------------------------------------------
// HTTP

struct ScoringService::Impl
{
  Impl(const ScoringEngine & e, std::optional<std::string> t) : engine(e), token(std::move(t)) {}

  const ScoringEngine & engine;
  std::optional<std::string> token;
  httplib::Server server;
  std::thread thread;
};

namespace
{

void send(httplib::Response & res, const Reply & reply)
{
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

ScoringService::ScoringService(const ScoringEngine & engine, std::optional<std::string> bearer_token,
                               std::size_t threads)
: impl_(std::make_unique<Impl>(engine, std::move(bearer_token)))
{
  auto & svr = impl_->server;
  const std::size_t n = resolve_workers(threads);
  svr.new_task_queue = [n] { return new httplib::ThreadPool(n); };
  svr.set_payload_max_length(std::size_t{512} << 20);

  Impl * self = impl_.get();
  svr.set_pre_routing_handler([self](const httplib::Request & req, httplib::Response & res) {
    if (!self->token) return httplib::Server::HandlerResponse::Unhandled;
    if (req.get_header_value("Authorization") == "Bearer " + *self->token) {
      return httplib::Server::HandlerResponse::Unhandled;
    }
    send(res, fail(401, "Unauthorized", "missing or wrong bearer token"));
    return httplib::Server::HandlerResponse::Handled;
  });
  svr.Post("/v1/score", [self](const httplib::Request & req, httplib::Response & res) {
    send(res, self->engine.score_body(req.body));
  });
  svr.Post("/v1/score/batch", [self](const httplib::Request & req, httplib::Response & res) {
    send(res, self->engine.score_batch_body(req.body));
  });
  svr.Get("/v1/health", [self](const httplib::Request &, httplib::Response & res) {
    send(res, {200, self->engine.health()});
  });
  svr.set_exception_handler([](const httplib::Request &, httplib::Response & res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception & e) {
      what = e.what();
    } catch (...) {
    }
    send(res, fail(500, "Internal", what));
  });
}

ScoringService::~ScoringService() { stop(); }

int ScoringService::bind(const std::string & host, int port)
{
  auto & svr = impl_->server;
  if (port == 0) {
    const int bound = svr.bind_to_any_port(host);
    if (bound < 0) throw PreconditionError("cannot bind " + host);
    return bound;
  }
  if (!svr.bind_to_port(host, port)) throw PreconditionError("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void ScoringService::listen() { impl_->server.listen_after_bind(); }

int ScoringService::start(const std::string & host, int port)
{
  const int bound = bind(host, port);
  impl_->thread = std::thread([this] { listen(); });
  impl_->server.wait_until_ready();
  return bound;
}

void ScoringService::stop()
{
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace tripscore
