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


#ifndef TRIPSCORE__SERVICE_HPP_
#define TRIPSCORE__SERVICE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "tripscore/evaluator.hpp"
#include "tripscore/io.hpp"
#include "tripscore/judge.hpp"
#include "tripscore/model.hpp"

namespace tripscore
{

inline constexpr std::size_t kMaxBatchSize = 1024;

std::string_view engine_version();

struct ServiceConfig
{
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path catalog_path;
  std::filesystem::path queries_path;  // optional
  std::optional<std::filesystem::path> weights_path;
  Mode default_mode = Mode::RuleOnly;
  std::size_t workers = 0;  // 0: hardware concurrency
  std::optional<std::string> bearer_token;
  std::optional<JudgeConfig> judge;
  std::size_t judge_inflight_cap = 8;

  /// Relative paths are resolved against `base_dir`.
  static ServiceConfig from_json(const Json & j, const std::filesystem::path & base_dir = {});
  /// TRIPSCORE_PORT and TRIPSCORE_CATALOG override the file.
  void apply_env();
};

ServiceConfig load_service_config(const std::filesystem::path & path);

/// Status code plus JSON body.
struct Reply
{
  int status = 200;
  Json body;
};

/// Transport-free request handling. Shares only immutable state between
/// calls, so one engine serves concurrent requests.
class ScoringEngine
{
public:
  ScoringEngine(ReferenceCatalog catalog, std::vector<Query> queries, WeightConfig weights = WeightConfig::optimized(),
                Mode default_mode = Mode::RuleOnly, std::shared_ptr<JudgePort> judge = nullptr,
                std::size_t workers = 0);

  /// POST /v1/score
  Reply score_body(std::string_view body) const;
  Reply score(const Json & request) const;
  /// POST /v1/score/batch; body is an array of score requests.
  Reply score_batch_body(std::string_view body) const;
  Reply score_batch(const Json & requests) const;
  /// GET /v1/health
  Json health() const;

  const ReferenceCatalog & catalog() const { return catalog_; }

private:
  Reply score_one(const Json & request) const;

  ReferenceCatalog catalog_;
  std::map<std::string, Query> queries_;
  WeightConfig weights_;
  Mode default_mode_;
  std::shared_ptr<JudgePort> judge_;
  std::size_t workers_;
};

/// Loads catalog, queries and weights named by `config`; any failure throws.
std::unique_ptr<ScoringEngine> make_engine(const ServiceConfig & config);

/// HTTP front end over a ScoringEngine.
class ScoringService
{
public:
  ScoringService(const ScoringEngine & engine, std::optional<std::string> bearer_token = std::nullopt,
                 std::size_t threads = 0);
  ~ScoringService();
  ScoringService(const ScoringService &) = delete;
  ScoringService & operator=(const ScoringService &) = delete;

  /// Binds; returns the bound port (useful with port 0).
  int bind(const std::string & host, int port);
  /// Blocks until stop().
  void listen();
  /// bind() + listen() on a background thread.
  int start(const std::string & host, int port);
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tripscore

#endif  // TRIPSCORE__SERVICE_HPP_
