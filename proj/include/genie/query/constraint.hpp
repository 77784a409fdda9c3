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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "json.hpp"

namespace genie::query {

enum class IntentCategory { recipe_search, constraint_override, information_request, general_clarification };

std::string_view to_string(IntentCategory c);
std::optional<IntentCategory> parse_intent_category(std::string_view s);

struct Intent {
    IntentCategory category = IntentCategory::general_clarification;
    double confidence = 0.0;
    std::string rationale;

    bool operator==(const Intent&) const = default;
};

enum class ConstraintKind { flag, bound, include_entity, exclude_entity, method_flag, subjective };
enum class Comparator { lt, le, gt, ge };
enum class Origin { text, graph_action, learned };
enum class ConstraintStatus { active, superseded, pending };

std::string_view to_string(ConstraintKind k);
std::string_view to_string(Comparator c);  // "<", "<=", ">", ">="
std::string_view to_string(Origin o);
std::string_view to_string(ConstraintStatus s);
std::optional<Comparator> parse_comparator(std::string_view s);

inline bool is_upper(Comparator c) { return c == Comparator::lt || c == Comparator::le; }
bool compare(double value, Comparator c, double bound);

struct Bound {
    Comparator comparator = Comparator::lt;
    double value = 0.0;
    kg::Unit unit = kg::Unit::none;

    bool operator==(const Bound&) const = default;
};

// One symbolic demand. `key` is the flag name, attribute name, node id,
// method flag or raw term depending on `kind`.
struct Constraint {
    ConstraintKind kind = ConstraintKind::flag;
    std::string key;
    bool flag_value = true;       // flag and method_flag
    std::optional<Bound> bound;   // bound
    bool unresolved = false;      // include/exclude whose mention is awaiting clarification
    std::optional<std::string> substituted_from;  // surface that resolved through the synonym table
    Origin origin = Origin::text;
    int turn = 0;
    ConstraintStatus status = ConstraintStatus::active;
    std::optional<std::string> superseded_by;  // ref of the constraint that won
    std::uint64_t source_action = 0;           // session action that contributed it
    std::string cites;                         // learned only: the counter that produced it

    // Identity used for latest-wins: two constraints with the same ref
    // address the same demand ("bound:protein:max", "exclude:BlackPepper").
    std::string ref() const;

    bool operator==(const Constraint&) const = default;
};

Constraint make_flag(std::string name, bool value = true);
Constraint make_bound(std::string attr, Comparator c, double value, kg::Unit unit);
Constraint make_include(std::string node_id);
Constraint make_exclude(std::string node_id);
Constraint make_method_flag(std::string name, bool value = true);
Constraint make_subjective(std::string term);

// Human-readable form: "vegan", "calories < 400 kcal", "excludes Black Pepper".
std::string describe(const Constraint& c, const kg::GraphSnapshot* snapshot = nullptr);

// True when the constraint may filter candidates: active, resolved,
// not subjective and not learned.
bool filter_effective(const Constraint& c);

struct Clarification {
    std::string term;
    std::vector<std::string> candidates;
    std::string reason;  // "subjective", "synonym_proposal" or "unresolved"

    bool operator==(const Clarification&) const = default;
};

enum class ConflictStatus { unresolved, resolved };

struct Conflict {
    std::string first;   // constraint signatures, first < second
    std::string second;
    ConflictStatus status = ConflictStatus::unresolved;
    std::optional<std::string> winner;

    std::string id() const { return first + "|" + second; }
    bool operator==(const Conflict&) const = default;
};

std::string conflict_id(std::string_view a, std::string_view b);

struct ConstraintSet {
    std::vector<Constraint> constraints;  // arrival order (turn, then position)
    std::vector<Clarification> pending_clarifications;
    std::vector<Conflict> conflicts;

    std::vector<Constraint> active() const;
    std::vector<Constraint> effective() const;
    const Constraint* find_active(std::string_view ref) const;
    bool empty() const { return constraints.empty() && pending_clarifications.empty(); }

    bool operator==(const ConstraintSet&) const = default;
};

void to_json(nlohmann::json& j, const Intent& i);
void to_json(nlohmann::json& j, const Constraint& c);
void to_json(nlohmann::json& j, const Clarification& c);
void to_json(nlohmann::json& j, const Conflict& c);
void to_json(nlohmann::json& j, const ConstraintSet& s);

}  // namespace genie::query
