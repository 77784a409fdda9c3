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

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace genie::kg {

enum class NodeKind { recipe, ingredient, nutrient, condition, cuisine, method, benefit };
enum class Unit { kcal, g, mg, none };
enum class Provenance { curated, inferred, user };
enum class Direction { out, in, both };

std::string_view to_string(NodeKind kind);
std::string_view to_string(Unit unit);
std::string_view to_string(Provenance provenance);
std::optional<NodeKind> parse_node_kind(std::string_view s);
std::optional<Unit> parse_unit(std::string_view s);
std::optional<Provenance> parse_provenance(std::string_view s);

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::none;

    bool operator==(const Quantity&) const = default;
};

// Mass quantities are compared in grams; calories stay in kcal.
Quantity normalize(Quantity q);

// Shortest round-trip decimal text ("320", "0.42").
std::string format_number(double value);

// Display form for a normalized quantity: "320 kcal", "12 g", "420 mg".
std::string format_quantity(Quantity q);

struct EntityNode {
    std::string id;
    std::string label;
    NodeKind kind = NodeKind::ingredient;
    std::map<std::string, Quantity> numeric_attrs;
    std::map<std::string, std::string> categorical_attrs;

    bool operator==(const EntityNode&) const = default;
};

struct Triple {
    std::string subject;
    std::string relation;
    std::string object;

    auto operator<=>(const Triple&) const = default;
};

struct RelationEdge {
    std::string subject;
    std::string relation;
    std::string object;
    Provenance provenance = Provenance::curated;
    std::uint64_t version = 0;

    Triple triple() const { return {subject, relation, object}; }
    bool operator==(const RelationEdge&) const = default;
};

// Names the seven relations every registry starts with.
namespace rel {
inline constexpr std::string_view contains = "contains";
inline constexpr std::string_view belongs_to_cuisine = "belongsToCuisine";
inline constexpr std::string_view recommends_for = "recommendsFor";
inline constexpr std::string_view substitutable_by = "substitutableBy";
inline constexpr std::string_view contains_ingredient = "containsIngredient";
inline constexpr std::string_view derives_from = "derivesFrom";
inline constexpr std::string_view neutralize_odor = "neutralizeOdor";
}  // namespace rel

struct RelationInfo {
    std::string name;
    std::string description;
    std::string inverse_name;
};

// Relation vocabulary. Relations are interned; ids are dense and stable for
// the lifetime of a registry.
class RelationRegistry {
public:
    // Registry holding only the seven seeded relations.
    static RelationRegistry seeded();

    // Seeded relations plus every row of a relations.csv stream
    // (header relation,description,inverse_name).
    static RelationRegistry from_csv(std::istream& in);

    std::uint32_t add(RelationInfo info);
    std::optional<std::uint32_t> find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }
    const RelationInfo& info(std::uint32_t id) const { return relations_.at(id); }
    const std::string& name(std::uint32_t id) const { return relations_.at(id).name; }
    std::size_t size() const { return relations_.size(); }
    const std::vector<RelationInfo>& all() const { return relations_; }

private:
    std::vector<RelationInfo> relations_;
    std::unordered_map<std::string, std::uint32_t> by_name_;
};

}  // namespace genie::kg
