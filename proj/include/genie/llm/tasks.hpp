// Copyright 2026 The Genie Authors.
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


#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genie/kg/types.hpp"
#include "genie/llm/gateway.hpp"

namespace genie::llm {

struct DishFacts {
    std::string id;
    std::string name;
    std::string status;                  // "full" or "borderline"
    std::vector<std::string> attrs;      // "320 kcal", "12 g protein"
    std::vector<std::string> satisfied;  // constraint descriptions
    std::vector<std::string> unknown;    // borderline reasons
    std::vector<std::string> tags;       // "excludes dairy", "is moderately high in protein"

    bool operator==(const DishFacts&) const = default;
};

struct SummaryPayload {
    std::vector<DishFacts> dishes;
    std::string question;  // set when answering an information request

    bool operator==(const SummaryPayload&) const = default;
};

nlohmann::json to_json(const SummaryPayload& payload);
SummaryPayload summary_payload_from_json(const nlohmann::json& j);

inline constexpr const char* kEmptySummary = "No recipes matched the current constraints.";

// Digit runs with an optional decimal part, in order of appearance.
std::vector<std::string> extract_numerals(std::string_view text);
// Numerals found in any string or number of the payload.
std::vector<std::string> payload_numerals(const SummaryPayload& payload);
// Numerals of `text` that the payload does not contain.
std::vector<std::string> ungrounded_numerals(std::string_view text, const SummaryPayload& payload);

// One paragraph per dish. Live-provider text with an ungrounded numeral is
// re-asked and finally rejected with Error(schema_violation).
std::string generate_summary(const Gateway& gateway, const SummaryPayload& payload);

struct QueryContext {
    std::vector<std::string> constraint_refs;  // "bound:sodium:max", "flag:isVegan"
    std::vector<std::string> dishes;           // shown recipe names, ranked
    int turns = 0;
};

// Three suggested follow-up queries.
std::vector<std::string> generate_queries(const Gateway& gateway, const QueryContext& context);

// Maps a surface form to a node id, or std::nullopt.
using SurfaceResolver = std::function<std::optional<std::string>(const std::string&)>;

// Proposed edges (provenance inferred). Proposals whose surfaces do not
// resolve, or whose relation is not in `relations`, are dropped.
std::vector<kg::RelationEdge> extract_relations(const Gateway& gateway, std::string_view text,
                                                const SurfaceResolver& resolve,
                                                const kg::RelationRegistry& relations);

// Candidate canonical surfaces for an unknown term, best first.
std::vector<std::string> propose_synonyms(const Gateway& gateway, const std::string& term,
                                          const std::vector<std::string>& vocabulary);

// Question shown to the user; `candidates` may be empty.
std::string clarification_question(const Gateway& gateway, const std::string& term,
                                   const std::vector<std::string>& candidates);

}  // namespace genie::llm
