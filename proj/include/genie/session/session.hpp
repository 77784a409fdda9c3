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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "genie/llm/gateway.hpp"
#include "genie/match/matcher.hpp"
#include "genie/query/lexicon.hpp"
#include "genie/query/resources.hpp"
#include "genie/session/profile.hpp"

namespace genie::session {

struct SessionSettings {
    int repetition_threshold = 3;
    int default_detail = 2;
};

// Everything a session reads but never changes: one snapshot and the
// resources built for it. Sessions keep the engine they started with.
class Engine {
public:
    Engine(std::shared_ptr<const kg::GraphSnapshot> snapshot, query::ParserResources resources,
           match::MatchConfig match_config, llm::Gateway gateway, SessionSettings settings = {});

    const kg::GraphSnapshot& snapshot() const { return *snapshot_; }
    std::shared_ptr<const kg::GraphSnapshot> snapshot_ptr() const { return snapshot_; }
    const query::ParserResources& resources() const { return resources_; }
    const query::Lexicon& lexicon() const { return lexicon_; }
    const match::Matcher& matcher() const { return matcher_; }
    const llm::Gateway& gateway() const { return gateway_; }
    const SessionSettings& settings() const { return settings_; }

    // Same resources over a newer snapshot.
    std::shared_ptr<const Engine> with_snapshot(std::shared_ptr<const kg::GraphSnapshot> snapshot) const;

private:
    std::shared_ptr<const kg::GraphSnapshot> snapshot_;
    query::ParserResources resources_;
    query::Lexicon lexicon_;
    match::Matcher matcher_;
    llm::Gateway gateway_;
    SessionSettings settings_;
};

struct SessionOptions {
    std::function<std::int64_t()> clock;  // ms since epoch; wall clock when unset
    std::ostream* log = nullptr;           // receives one NDJSON line per action
};

struct StageResult {
    InteractionAction action;
    bool duplicate = false;  // the same node was already staged with the same polarity
};

struct TurnResponse {
    std::uint64_t turn_id = 0;
    query::Intent intent;
    std::string reply;
    std::optional<match::Recommendation> recommendation;  // set when the turn changed it
    std::vector<query::Clarification> clarifications;
    std::vector<query::Conflict> conflicts;  // unresolved
    std::uint64_t query_version = 0;
};

struct Outcome {
    PreferenceProfile profile;
    match::Recommendation recommendation;
    std::string summary;
    std::uint64_t query_version = 0;
};

class Session {
public:
    explicit Session(std::shared_ptr<const Engine> engine, SessionOptions options = {});

    // Throws Error(empty_message).
    TurnResponse route_turn(const std::string& message);

    // Throws Error(unknown_node).
    StageResult stage_action(ActionKind kind, const std::string& node_id);
    // Throws Error(no_staged_actions), Error(stale_version) or
    // Error(unresolved_conflict).
    Outcome apply(std::optional<std::uint64_t> expected_version = std::nullopt);
    // Undoing a staged action unstages it; undoing an apply undoes its batch.
    // Throws Error(unknown_action) or Error(already_undone).
    Outcome undo(std::uint64_t action_id);
    // `keep` is the signature of the side that stays active.
    // Throws Error(unknown_conflict) or Error(invalid_argument).
    Outcome resolve_conflict(const std::string& conflict_id, const std::string& keep);
    // Throws Error(invalid_argument) unless `counter_key` has a proposal.
    Outcome confirm_learned(const std::string& counter_key);

    PreferenceProfile profile() const;
    // Profile as it would be if the staged actions were applied.
    PreferenceProfile prospective_profile() const;
    std::vector<query::Conflict> conflicts() const;  // of the prospective profile
    std::vector<query::Constraint> learn_repetition() const;

    const std::vector<InteractionAction>& history() const { return actions_; }
    const std::map<std::uint64_t, ParsedTurn>& parsed_turns() const { return parsed_; }
    const std::optional<match::Recommendation>& recommendation() const { return recommendation_; }
    const std::string& summary() const { return summary_; }
    std::uint64_t query_version() const { return query_version_; }
    const Engine& engine() const { return *engine_; }

    // Throws Error(no_recommendation_yet).
    kg::SubgraphView graph(int detail_level) const;
    std::vector<std::string> suggested_queries() const;

private:
    InteractionAction record(ActionKind kind, std::string target, ActionStatus status);
    InteractionAction* find(std::uint64_t id);
    FoldContext fold_context() const;
    Outcome recompute();
    Outcome outcome() const;
    std::string conflict_note(const std::vector<query::Conflict>& unresolved) const;
    std::optional<ParsedTurn> try_parse(const std::string& message, const query::Intent& intent,
                                        std::uint64_t turn) const;

    std::shared_ptr<const Engine> engine_;
    SessionOptions options_;
    std::vector<InteractionAction> actions_;
    std::map<std::uint64_t, ParsedTurn> parsed_;
    std::vector<std::string> messages_;
    std::optional<match::Recommendation> recommendation_;
    std::string summary_;
    std::uint64_t query_version_ = 0;
    std::uint64_t next_id_ = 1;
};

}  // namespace genie::session
