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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "genie/query/constraint.hpp"
#include "genie/query/resources.hpp"

namespace genie::session {

enum class ActionKind { include_node, exclude_node, apply, undo, text_query, clarification_answer };
enum class ActionStatus { staged, applied, undone };

std::string_view to_string(ActionKind k);
std::string_view to_string(ActionStatus s);
std::optional<ActionKind> parse_action_kind(std::string_view s);
std::optional<ActionStatus> parse_action_status(std::string_view s);

struct InteractionAction {
    std::uint64_t id = 0;
    ActionKind kind = ActionKind::text_query;
    // Node id, message text, undone action id, applied ids ("3,4") or a
    // JSON answer object, depending on `kind`.
    std::string target;
    std::int64_t timestamp = 0;
    ActionStatus status = ActionStatus::applied;

    bool operator==(const InteractionAction&) const = default;
};

// Constraints and clarifications a text turn contributed.
struct ParsedTurn {
    std::vector<query::Constraint> constraints;
    std::vector<query::Clarification> clarifications;

    bool operator==(const ParsedTurn&) const = default;
};

struct PreferenceProfile {
    query::ConstraintSet active_constraints;
    std::vector<InteractionAction> history;
    std::map<std::string, int> rejection_counters;  // "node:BlackPepper", "class:highCarb"
    std::vector<query::Constraint> learned;         // confirmed, origin learned
    std::vector<query::Constraint> proposals;       // over threshold, awaiting confirmation

    bool operator==(const PreferenceProfile&) const = default;
};

// Equality of everything but the history.
bool same_state(const PreferenceProfile& a, const PreferenceProfile& b);

struct FoldContext {
    const kg::GraphSnapshot* snapshot = nullptr;
    const query::Entailments* entailments = nullptr;
    int repetition_threshold = 3;
};

// Rebuilds the profile from the record. Actions count when applied (and,
// with `include_staged`, when staged). Later constraints win over earlier
// ones they contradict, except that a true dietary flag is never overridden
// without a recorded decision: the challenger is left pending and the pair
// is reported as an unresolved conflict.
PreferenceProfile fold_profile(const std::vector<InteractionAction>& actions,
                               const std::map<std::uint64_t, ParsedTurn>& parsed, const FoldContext& context,
                               bool include_staged = false);

// clarification_answer targets.
std::string resolve_answer(const std::string& conflict_id, const std::string& keep);
std::string confirm_answer(const std::string& counter_key);

nlohmann::json to_json(const InteractionAction& a);
InteractionAction action_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PreferenceProfile& p);

}  // namespace genie::session
