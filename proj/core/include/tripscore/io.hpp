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

#ifndef TRIPSCORE__IO_HPP_
#define TRIPSCORE__IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tripscore/model.hpp"

namespace tripscore
{

// Insertion-ordered so serialized documents keep their canonical field order.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError("line N", ...).
Json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path & path);

// Itinerary (itineraryName / recommendReason / dayInfos / tips)

/// Throws ParseError for text that is not JSON and SchemaError naming the
/// first offending field otherwise. Tolerates a surrounding ``` fence.
Itinerary load_itinerary(std::string_view text);
Itinerary itinerary_from_json(const Json & j);
Json itinerary_to_json(const Itinerary & itinerary);
std::string serialize_itinerary(const Itinerary & itinerary);

// Reference catalog

ReferenceCatalog load_catalog(const std::filesystem::path & path);
ReferenceCatalog parse_catalog(std::string_view text);
ReferenceCatalog catalog_from_json(const Json & j);
Json catalog_to_json(const ReferenceCatalog & catalog);

// Query; a query file holds one object or an array of objects.

Query query_from_json(const Json & j);
Json query_to_json(const Query & query);
std::vector<Query> load_queries(const std::filesystem::path & path);

// Annotation pairs, JSON-lines

AnnotationPair pair_from_json(const Json & j);
Json pair_to_json(const AnnotationPair & pair);
std::vector<AnnotationPair> parse_pairs(std::string_view jsonl);
std::vector<AnnotationPair> load_pairs(const std::filesystem::path & path);
std::string serialize_pairs(const std::vector<AnnotationPair> & pairs);

// Scores and weights

Json breakdown_to_json(const ScoreBreakdown & breakdown);
ScoreBreakdown breakdown_from_json(const Json & j);
Json weights_to_json(const WeightConfig & weights);
WeightConfig weights_from_json(const Json & j);
WeightConfig load_weights(const std::filesystem::path & path);

}  // namespace tripscore

#endif  // TRIPSCORE__IO_HPP_
