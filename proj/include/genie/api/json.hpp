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

#include <string>

#include "genie/error.hpp"
#include "genie/kg/snapshot.hpp"
#include "genie/kg/subgraph.hpp"
#include "genie/match/matcher.hpp"
#include "genie/session/session.hpp"
#include "json.hpp"

namespace genie::api {

// Nodes carry label, kind, attributes, diff marker and highlight flag.
nlohmann::json subgraph_json(const kg::SubgraphView& view, const kg::GraphSnapshot& snapshot);
nlohmann::json results_json(const std::vector<match::MatchResult>& results, const kg::GraphSnapshot& snapshot);
// {results, diagnostics, query_version, snapshot_version, blocked}
nlohmann::json recommendation_json(const match::Recommendation& rec, const kg::GraphSnapshot& snapshot);
nlohmann::json history_json(const std::vector<session::InteractionAction>& actions);

// {reply_text, intent, turn_id, query_version, pending_clarifications,
//  conflicts, recommendation?, subgraph?}
nlohmann::json turn_json(const session::TurnResponse& turn, const kg::GraphSnapshot& snapshot);
// {recommendation, subgraph, summary, profile, query_version}
nlohmann::json outcome_json(const session::Outcome& outcome, const kg::GraphSnapshot& snapshot);

nlohmann::json error_json(const std::string& code, const std::string& message,
                          const nlohmann::json& details = nlohmann::json::object());
int http_status(ErrorCode code);

}  // namespace genie::api
