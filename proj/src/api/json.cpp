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


#include "genie/api/json.hpp"

#include <algorithm>

namespace genie::api {

using nlohmann::json;

json subgraph_json(const kg::SubgraphView& view, const kg::GraphSnapshot& snapshot) {
    json nodes = json::array();
    for (const auto& id : view.nodes) {
        const auto& n = snapshot.node(id);
        json numeric = json::object();
        for (const auto& [k, q] : n.numeric_attrs) numeric[k] = {{"value", q.value}, {"unit", kg::to_string(q.unit)}};
        json node = {{"id", n.id},
                     {"label", n.label},
                     {"kind", kg::to_string(n.kind)},
                     {"numeric_attrs", numeric},
                     {"categorical_attrs", n.categorical_attrs},
                     {"highlighted", std::find(view.highlights.begin(), view.highlights.end(), id) !=
                                         view.highlights.end()}};
        if (const auto it = view.diff.find(id); it != view.diff.end()) node["diff"] = kg::to_string(it->second);
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (const auto& e : view.edges) {
        json edge = {{"subject", e.subject}, {"relation", e.relation}, {"object", e.object}};
        if (const auto found = snapshot.edge(e)) edge["provenance"] = kg::to_string(found->provenance);
        edges.push_back(std::move(edge));
    }
    return {{"nodes", nodes}, {"edges", edges}, {"detail_level", view.detail_level}, {"highlights", view.highlights}};
}

json results_json(const std::vector<match::MatchResult>& results, const kg::GraphSnapshot& snapshot) {
    json out = json::array();
    for (const auto& r : results) {
        json misses = json::array();
        for (const auto& m : r.violated_or_unknown) {
            misses.push_back({{"ref", m.ref}, {"reason", m.reason}, {"detail", m.detail}});
        }
        const auto* n = snapshot.find(r.recipe);
        out.push_back({{"recipe", r.recipe},
                       {"name", n ? n->label : r.recipe},
                       {"status", match::to_string(r.status)},
                       {"score", r.score},
                       {"satisfied", r.satisfied},
                       {"violated_or_unknown", misses},
                       {"substitutions", r.substitutions}});
    }
    return out;
}

json recommendation_json(const match::Recommendation& rec, const kg::GraphSnapshot& snapshot) {
    json diagnostics = json::array();
    for (const auto& d : rec.diagnostics) {
        diagnostics.push_back({{"ref", d.ref}, {"description", d.description}, {"results", d.results}});
    }
    return {{"results", results_json(rec.results, snapshot)},
            {"diagnostics", diagnostics},
            {"blocked", rec.blocked},
            {"query_version", rec.query_version},
            {"snapshot_version", rec.snapshot_version}};
}

json history_json(const std::vector<session::InteractionAction>& actions) {
    json out = json::array();
    for (const auto& a : actions) out.push_back(session::to_json(a));
    return out;
}

json turn_json(const session::TurnResponse& turn, const kg::GraphSnapshot& snapshot) {
    json j = {{"turn_id", turn.turn_id},
              {"intent", turn.intent},
              {"reply_text", turn.reply},
              {"pending_clarifications", turn.clarifications},
              {"conflicts", turn.conflicts},
              {"query_version", turn.query_version}};
    if (turn.recommendation) {
        j["recommendation"] = recommendation_json(*turn.recommendation, snapshot);
        j["subgraph"] = subgraph_json(turn.recommendation->subgraph, snapshot);
    }
    return j;
}

json outcome_json(const session::Outcome& outcome, const kg::GraphSnapshot& snapshot) {
    return {{"recommendation", recommendation_json(outcome.recommendation, snapshot)},
            {"subgraph", subgraph_json(outcome.recommendation.subgraph, snapshot)},
            {"summary", outcome.summary},
            {"profile", session::to_json(outcome.profile)},
            {"query_version", outcome.query_version}};
}

json error_json(const std::string& code, const std::string& message, const json& details) {
    return {{"code", code}, {"message", message}, {"details", details}};
}

int http_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument:
        case ErrorCode::malformed_row: return 400;
        case ErrorCode::unknown_node:
        case ErrorCode::unknown_action:
        case ErrorCode::unknown_conflict:
        case ErrorCode::unknown_session: return 404;
        case ErrorCode::already_undone:
        case ErrorCode::no_staged_actions:
        case ErrorCode::duplicate_stage:
        case ErrorCode::unresolved_conflict:
        case ErrorCode::no_recommendation_yet:
        case ErrorCode::stale_version:
        case ErrorCode::version_conflict: return 409;
        case ErrorCode::empty_message:
        case ErrorCode::no_parsable_content:
        case ErrorCode::no_candidates: return 422;
        case ErrorCode::provider_timeout: return 504;
        case ErrorCode::provider_error:
        case ErrorCode::credential_missing:
        case ErrorCode::schema_violation: return 502;
        default: return 500;
    }
}

}  // namespace genie::api
