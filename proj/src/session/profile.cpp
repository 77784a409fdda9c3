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


#include "genie/session/profile.hpp"

#include <algorithm>
#include <set>

#include "genie/error.hpp"
#include "genie/kg/closure.hpp"
#include "genie/query/conflicts.hpp"

namespace genie::session {

using nlohmann::json;
using query::Constraint;
using query::ConstraintStatus;

std::string_view to_string(ActionKind k) {
    switch (k) {
        case ActionKind::include_node: return "include_node";
        case ActionKind::exclude_node: return "exclude_node";
        case ActionKind::apply: return "apply";
        case ActionKind::undo: return "undo";
        case ActionKind::text_query: return "text_query";
        case ActionKind::clarification_answer: return "clarification_answer";
    }
    return "text_query";
}

std::string_view to_string(ActionStatus s) {
    switch (s) {
        case ActionStatus::staged: return "staged";
        case ActionStatus::applied: return "applied";
        case ActionStatus::undone: return "undone";
    }
    return "applied";
}

std::optional<ActionKind> parse_action_kind(std::string_view s) {
    for (auto k : {ActionKind::include_node, ActionKind::exclude_node, ActionKind::apply, ActionKind::undo,
                   ActionKind::text_query, ActionKind::clarification_answer}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<ActionStatus> parse_action_status(std::string_view s) {
    for (auto st : {ActionStatus::staged, ActionStatus::applied, ActionStatus::undone}) {
        if (to_string(st) == s) return st;
    }
    return std::nullopt;
}

bool same_state(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.active_constraints == b.active_constraints && a.rejection_counters == b.rejection_counters &&
           a.learned == b.learned && a.proposals == b.proposals;
}

std::string resolve_answer(const std::string& conflict_id, const std::string& keep) {
    return json{{"type", "resolve"}, {"conflict", conflict_id}, {"keep", keep}}.dump();
}

std::string confirm_answer(const std::string& counter_key) {
    return json{{"type", "confirm"}, {"key", counter_key}}.dump();
}

namespace {

json parse_answer(const std::string& target) {
    auto j = json::parse(target, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return json::object();
    return j;
}

class Folder {
public:
    explicit Folder(const FoldContext& ctx) : ctx_(ctx) {}

    void decide(const std::string& conflict, const std::string& keep) { decisions_[conflict] = keep; }

    void merge(Constraint c) {
        const auto sig = query::signature(c);
        // A restatement of an active constraint is a no-op.
        for (const auto& e : set_.constraints) {
            if (e.status == ConstraintStatus::active && e.unresolved == c.unresolved && query::signature(e) == sig) return;
        }
        std::vector<std::size_t> rivals;
        bool loses = false;
        std::optional<std::string> beaten_by;
        for (std::size_t i = 0; i < set_.constraints.size(); ++i) {
            const auto& e = set_.constraints[i];
            if (e.status != ConstraintStatus::active) continue;
            if (e.ref() != c.ref() && !query::contradicts(e, c, *ctx_.snapshot, *ctx_.entailments)) continue;
            const auto esig = query::signature(e);
            if (esig == sig) {
                rivals.push_back(i);
                continue;
            }
            const auto id = query::conflict_id(esig, sig);
            query::Conflict conflict{std::min(esig, sig), std::max(esig, sig), query::ConflictStatus::resolved,
                                     std::nullopt};
            if (const auto d = decisions_.find(id); d != decisions_.end()) {
                conflict.winner = d->second;
                record(conflict);
                if (d->second == sig) {
                    rivals.push_back(i);
                } else {
                    loses = true;
                    beaten_by = esig;
                }
            } else if (e.kind == query::ConstraintKind::flag && e.flag_value) {
                conflict.status = query::ConflictStatus::unresolved;
                record(conflict);
                c.status = ConstraintStatus::pending;
            } else {
                conflict.winner = sig;
                record(conflict);
                rivals.push_back(i);
            }
        }
        if (loses) {
            c.status = ConstraintStatus::superseded;
            c.superseded_by = beaten_by;
        } else if (c.status == ConstraintStatus::active) {
            for (auto i : rivals) {
                set_.constraints[i].status = ConstraintStatus::superseded;
                set_.constraints[i].superseded_by = sig;
            }
        }
        set_.constraints.push_back(std::move(c));
    }

    query::ConstraintSet take() { return std::move(set_); }
    query::ConstraintSet& set() { return set_; }

private:
    void record(const query::Conflict& c) {
        for (auto& existing : set_.conflicts) {
            if (existing.id() == c.id()) {
                existing = c;
                return;
            }
        }
        set_.conflicts.push_back(c);
    }

    const FoldContext& ctx_;
    std::map<std::string, std::string> decisions_;
    query::ConstraintSet set_;
};

bool counts(const InteractionAction& a, bool include_staged) {
    return a.status == ActionStatus::applied || (include_staged && a.status == ActionStatus::staged);
}

// Entailment classes carried by the node itself.
std::vector<std::string> node_classes(const FoldContext& ctx, const std::string& id) {
    std::vector<std::string> out;
    const auto* n = ctx.snapshot->find(id);
    if (!n) return out;
    const auto known = ctx.entailments->classes();
    for (const auto& [key, value] : n->categorical_attrs) {
        if (std::find(known.begin(), known.end(), value) != known.end()) out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Constraint learned_from(const std::string& key, ConstraintStatus status) {
    const auto colon = key.find(':');
    auto c = query::make_exclude(key.substr(colon + 1));
    c.origin = query::Origin::learned;
    c.cites = key;
    c.status = status;
    return c;
}

}  // namespace

PreferenceProfile fold_profile(const std::vector<InteractionAction>& actions,
                               const std::map<std::uint64_t, ParsedTurn>& parsed, const FoldContext& context,
                               bool include_staged) {
    if (!context.snapshot || !context.entailments) throw Error(ErrorCode::invalid_argument, "fold needs a snapshot");
    Folder folder(context);
    std::set<std::string> confirmed;
    for (const auto& a : actions) {
        if (a.kind != ActionKind::clarification_answer || !counts(a, include_staged)) continue;
        const auto answer = parse_answer(a.target);
        const auto type = answer.value("type", "");
        if (type == "resolve") folder.decide(answer.value("conflict", ""), answer.value("keep", ""));
        if (type == "confirm") confirmed.insert(answer.value("key", ""));
    }

    PreferenceProfile profile;
    profile.history = actions;
    const ParsedTurn* latest_text = nullptr;
    for (const auto& a : actions) {
        if (!counts(a, include_staged)) continue;
        switch (a.kind) {
            case ActionKind::text_query: {
                const auto it = parsed.find(a.id);
                if (it == parsed.end()) break;
                latest_text = &it->second;
                for (auto c : it->second.constraints) {
                    c.source_action = a.id;
                    folder.merge(std::move(c));
                }
                break;
            }
            case ActionKind::include_node:
            case ActionKind::exclude_node: {
                auto c = a.kind == ActionKind::include_node ? query::make_include(a.target)
                                                            : query::make_exclude(a.target);
                c.origin = query::Origin::graph_action;
                c.turn = static_cast<int>(a.id);
                c.source_action = a.id;
                folder.merge(std::move(c));
                if (a.kind == ActionKind::exclude_node) {
                    ++profile.rejection_counters["node:" + a.target];
                    for (const auto& cls : node_classes(context, a.target)) ++profile.rejection_counters["class:" + cls];
                }
                break;
            }
            default: break;
        }
    }
    if (latest_text) folder.set().pending_clarifications = latest_text->clarifications;
    profile.active_constraints = folder.take();

    for (const auto& key : confirmed) {
        if (profile.rejection_counters.contains(key)) profile.learned.push_back(learned_from(key, ConstraintStatus::active));
    }
    for (const auto& [key, count] : profile.rejection_counters) {
        if (count >= context.repetition_threshold && !confirmed.contains(key)) {
            profile.proposals.push_back(learned_from(key, ConstraintStatus::pending));
        }
    }
    return profile;
}

json to_json(const InteractionAction& a) {
    return {{"action_id", a.id},
            {"kind", to_string(a.kind)},
            {"target", a.target},
            {"timestamp", a.timestamp},
            {"status", to_string(a.status)}};
}

InteractionAction action_from_json(const json& j) {
    InteractionAction a;
    try {
        a.id = j.at("action_id").get<std::uint64_t>();
        const auto kind = parse_action_kind(j.at("kind").get<std::string>());
        const auto status = parse_action_status(j.at("status").get<std::string>());
        if (!kind || !status) throw Error(ErrorCode::malformed_row, "unknown action kind or status");
        a.kind = *kind;
        a.status = *status;
        a.target = j.at("target").get<std::string>();
        a.timestamp = j.at("timestamp").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_row, std::string("action record: ") + e.what());
    }
    return a;
}

json to_json(const PreferenceProfile& p) {
    json history = json::array();
    for (const auto& a : p.history) history.push_back(to_json(a));
    return {{"active_constraints", p.active_constraints},
            {"history", history},
            {"rejection_counters", p.rejection_counters},
            {"learned", p.learned},
            {"proposals", p.proposals}};
}

}  // namespace genie::session
