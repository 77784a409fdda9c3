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


#include "genie/query/constraint.hpp"

#include <algorithm>
#include <cctype>

namespace genie::query {

using nlohmann::json;

std::string_view to_string(IntentCategory c) {
    switch (c) {
        case IntentCategory::recipe_search: return "recipe_search";
        case IntentCategory::constraint_override: return "constraint_override";
        case IntentCategory::information_request: return "information_request";
        case IntentCategory::general_clarification: return "general_clarification";
    }
    return "general_clarification";
}

std::optional<IntentCategory> parse_intent_category(std::string_view s) {
    for (auto c : {IntentCategory::recipe_search, IntentCategory::constraint_override,
                   IntentCategory::information_request, IntentCategory::general_clarification}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

std::string_view to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::flag: return "flag";
        case ConstraintKind::bound: return "bound";
        case ConstraintKind::include_entity: return "include_entity";
        case ConstraintKind::exclude_entity: return "exclude_entity";
        case ConstraintKind::method_flag: return "method_flag";
        case ConstraintKind::subjective: return "subjective";
    }
    return "flag";
}

std::string_view to_string(Comparator c) {
    switch (c) {
        case Comparator::lt: return "<";
        case Comparator::le: return "<=";
        case Comparator::gt: return ">";
        case Comparator::ge: return ">=";
    }
    return "<";
}

std::string_view to_string(Origin o) {
    switch (o) {
        case Origin::text: return "text";
        case Origin::graph_action: return "graph_action";
        case Origin::learned: return "learned";
    }
    return "text";
}

std::string_view to_string(ConstraintStatus s) {
    switch (s) {
        case ConstraintStatus::active: return "active";
        case ConstraintStatus::superseded: return "superseded";
        case ConstraintStatus::pending: return "pending";
    }
    return "active";
}

std::optional<Comparator> parse_comparator(std::string_view s) {
    if (s == "<") return Comparator::lt;
    if (s == "<=" || s == "≤") return Comparator::le;
    if (s == ">") return Comparator::gt;
    if (s == ">=" || s == "≥") return Comparator::ge;
    return std::nullopt;
}

bool compare(double value, Comparator c, double bound) {
    switch (c) {
        case Comparator::lt: return value < bound;
        case Comparator::le: return value <= bound;
        case Comparator::gt: return value > bound;
        case Comparator::ge: return value >= bound;
    }
    return false;
}

std::string Constraint::ref() const {
    switch (kind) {
        case ConstraintKind::flag: return "flag:" + key;
        case ConstraintKind::bound:
            return "bound:" + key + (bound && !is_upper(bound->comparator) ? ":min" : ":max");
        case ConstraintKind::include_entity: return "include:" + key;
        case ConstraintKind::exclude_entity: return "exclude:" + key;
        case ConstraintKind::method_flag: return "method:" + key;
        case ConstraintKind::subjective: return "subjective:" + key;
    }
    return key;
}

Constraint make_flag(std::string name, bool value) {
    Constraint c;
    c.kind = ConstraintKind::flag;
    c.key = std::move(name);
    c.flag_value = value;
    return c;
}

Constraint make_bound(std::string attr, Comparator cmp, double value, kg::Unit unit) {
    Constraint c;
    c.kind = ConstraintKind::bound;
    c.key = std::move(attr);
    c.bound = Bound{cmp, value, unit};
    return c;
}

Constraint make_include(std::string node_id) {
    Constraint c;
    c.kind = ConstraintKind::include_entity;
    c.key = std::move(node_id);
    return c;
}

Constraint make_exclude(std::string node_id) {
    Constraint c;
    c.kind = ConstraintKind::exclude_entity;
    c.key = std::move(node_id);
    return c;
}

Constraint make_method_flag(std::string name, bool value) {
    Constraint c;
    c.kind = ConstraintKind::method_flag;
    c.key = std::move(name);
    c.flag_value = value;
    return c;
}

Constraint make_subjective(std::string term) {
    Constraint c;
    c.kind = ConstraintKind::subjective;
    c.key = std::move(term);
    return c;
}

namespace {

// "isDairyFree" -> "dairy-free", "highRetainNutrients" -> "high retain nutrients"
std::string humanize_flag(std::string_view name, bool hyphenate_free) {
    if (name.size() > 2 && name.substr(0, 2) == "is" && std::isupper(static_cast<unsigned char>(name[2]))) {
        name.remove_prefix(2);
    }
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (i > 0 && std::isupper(static_cast<unsigned char>(c))) {
            const bool free_suffix = hyphenate_free && name.substr(i) == "Free";
            out.push_back(free_suffix ? '-' : ' ');
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::string label_of(std::string_view id, const kg::GraphSnapshot* snapshot) {
    if (snapshot) {
        if (const auto* n = snapshot->find(id)) return n->label;
    }
    return std::string(id);
}

}  // namespace

std::string describe(const Constraint& c, const kg::GraphSnapshot* snapshot) {
    switch (c.kind) {
        case ConstraintKind::flag: {
            auto s = humanize_flag(c.key, true);
            return c.flag_value ? s : "not " + s;
        }
        case ConstraintKind::bound: {
            if (!c.bound) return c.key;
            return c.key + " " + std::string(to_string(c.bound->comparator)) + " " +
                   kg::format_number(c.bound->value) +
                   (c.bound->unit == kg::Unit::none ? "" : " " + std::string(kg::to_string(c.bound->unit)));
        }
        case ConstraintKind::include_entity:
            return c.unresolved ? "includes '" + c.key + "' (unresolved)" : "includes " + label_of(c.key, snapshot);
        case ConstraintKind::exclude_entity:
            return c.unresolved ? "excludes '" + c.key + "' (unresolved)" : "excludes " + label_of(c.key, snapshot);
        case ConstraintKind::method_flag: {
            auto s = humanize_flag(c.key, false);
            return c.flag_value ? s : "not " + s;
        }
        case ConstraintKind::subjective: return "'" + c.key + "' (needs clarification)";
    }
    return c.key;
}

bool filter_effective(const Constraint& c) {
    return c.status == ConstraintStatus::active && !c.unresolved && c.kind != ConstraintKind::subjective &&
           c.origin != Origin::learned;
}

std::string conflict_id(std::string_view a, std::string_view b) {
    if (b < a) std::swap(a, b);
    return std::string(a) + "|" + std::string(b);
}

std::vector<Constraint> ConstraintSet::active() const {
    std::vector<Constraint> out;
    for (const auto& c : constraints) {
        if (c.status == ConstraintStatus::active) out.push_back(c);
    }
    return out;
}

std::vector<Constraint> ConstraintSet::effective() const {
    std::vector<Constraint> out;
    for (const auto& c : constraints) {
        if (filter_effective(c)) out.push_back(c);
    }
    return out;
}

const Constraint* ConstraintSet::find_active(std::string_view ref) const {
    for (auto it = constraints.rbegin(); it != constraints.rend(); ++it) {
        if (it->status == ConstraintStatus::active && it->ref() == ref) return &*it;
    }
    return nullptr;
}

void to_json(json& j, const Intent& i) {
    j = {{"category", to_string(i.category)}, {"confidence", i.confidence}, {"rationale", i.rationale}};
}

void to_json(json& j, const Constraint& c) {
    j = {{"ref", c.ref()},
         {"kind", to_string(c.kind)},
         {"key", c.key},
         {"origin", to_string(c.origin)},
         {"turn", c.turn},
         {"status", to_string(c.status)},
         {"description", describe(c)}};
    if (c.kind == ConstraintKind::flag || c.kind == ConstraintKind::method_flag) j["value"] = c.flag_value;
    if (c.bound) {
        j["value"] = {{"comparator", to_string(c.bound->comparator)},
                      {"value", c.bound->value},
                      {"unit", kg::to_string(c.bound->unit)}};
    }
    if (c.unresolved) j["unresolved"] = true;
    if (c.substituted_from) j["substituted_from"] = *c.substituted_from;
    if (c.superseded_by) j["superseded_by"] = *c.superseded_by;
    if (c.source_action) j["source_action"] = c.source_action;
    if (!c.cites.empty()) j["cites"] = c.cites;
}

void to_json(json& j, const Clarification& c) {
    j = {{"term", c.term}, {"candidates", c.candidates}, {"reason", c.reason}};
}

void to_json(json& j, const Conflict& c) {
    j = {{"id", c.id()},
         {"first", c.first},
         {"second", c.second},
         {"status", c.status == ConflictStatus::resolved ? "resolved" : "unresolved"}};
    if (c.winner) j["winner"] = *c.winner;
}

void to_json(json& j, const ConstraintSet& s) {
    j = {{"constraints", s.constraints},
         {"pending_clarifications", s.pending_clarifications},
         {"conflicts", s.conflicts}};
}

}  // namespace genie::query
