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


#include "genie/kg/types.hpp"

#include <charconv>
#include <cmath>

#include "genie/error.hpp"
#include "genie/kg/csv.hpp"

namespace genie::kg {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::recipe: return "recipe";
        case NodeKind::ingredient: return "ingredient";
        case NodeKind::nutrient: return "nutrient";
        case NodeKind::condition: return "condition";
        case NodeKind::cuisine: return "cuisine";
        case NodeKind::method: return "method";
        case NodeKind::benefit: return "benefit";
    }
    return "ingredient";
}

std::string_view to_string(Unit unit) {
    switch (unit) {
        case Unit::kcal: return "kcal";
        case Unit::g: return "g";
        case Unit::mg: return "mg";
        case Unit::none: return "none";
    }
    return "none";
}

std::string_view to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::curated: return "curated";
        case Provenance::inferred: return "inferred";
        case Provenance::user: return "user";
    }
    return "curated";
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
    for (auto k : {NodeKind::recipe, NodeKind::ingredient, NodeKind::nutrient, NodeKind::condition,
                   NodeKind::cuisine, NodeKind::method, NodeKind::benefit}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<Unit> parse_unit(std::string_view s) {
    for (auto u : {Unit::kcal, Unit::g, Unit::mg, Unit::none}) {
        if (to_string(u) == s) return u;
    }
    return std::nullopt;
}

std::optional<Provenance> parse_provenance(std::string_view s) {
    for (auto p : {Provenance::curated, Provenance::inferred, Provenance::user}) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

Quantity normalize(Quantity q) {
    if (q.unit == Unit::mg) return {q.value / 1000.0, Unit::g};
    return q;
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) return std::to_string(value);
    return std::string(buf, end);
}

std::string format_quantity(Quantity q) {
    q = normalize(q);
    switch (q.unit) {
        case Unit::kcal: return format_number(q.value) + " kcal";
        case Unit::g:
            if (q.value > 0.0 && q.value < 1.0) {
                // Sub-gram amounts read better in mg; round away float noise.
                return format_number(std::round(q.value * 1000.0 * 1000.0) / 1000.0) + " mg";
            }
            return format_number(q.value) + " g";
        case Unit::mg: break;
        case Unit::none: return format_number(q.value);
    }
    return format_number(q.value);
}

RelationRegistry RelationRegistry::seeded() {
    RelationRegistry r;
    r.add({std::string(rel::contains), "recipe uses ingredient", "containedIn"});
    r.add({std::string(rel::belongs_to_cuisine), "recipe belongs to cuisine", "cuisineOf"});
    r.add({std::string(rel::recommends_for), "recipe suits a health condition", "recommendedBy"});
    r.add({std::string(rel::substitutable_by), "ingredient can be replaced by", "substitutes"});
    r.add({std::string(rel::contains_ingredient), "composite ingredient component", "ingredientOf"});
    r.add({std::string(rel::derives_from), "ingredient is derived from", "sourceOf"});
    r.add({std::string(rel::neutralize_odor), "ingredient neutralizes odor of", "odorNeutralizedBy"});
    return r;
}

RelationRegistry RelationRegistry::from_csv(std::istream& in) {
    RelationRegistry r = seeded();
    CsvReader reader(in);
    bool header = true;
    while (auto row = reader.next()) {
        if (header) {
            header = false;
            if (!row->fields.empty() && row->fields[0] == "relation") continue;
        }
        if (row->fields.empty() || row->fields[0].empty()) {
            throw Error(ErrorCode::malformed_row,
                        "relations.csv line " + std::to_string(row->line) + ": empty relation name");
        }
        RelationInfo info;
        info.name = row->fields[0];
        if (row->fields.size() > 1) info.description = row->fields[1];
        if (row->fields.size() > 2) info.inverse_name = row->fields[2];
        r.add(std::move(info));
    }
    return r;
}

std::uint32_t RelationRegistry::add(RelationInfo info) {
    if (auto existing = find(info.name)) {
        auto& slot = relations_[*existing];
        if (!info.description.empty()) slot.description = info.description;
        if (!info.inverse_name.empty()) slot.inverse_name = info.inverse_name;
        return *existing;
    }
    const auto id = static_cast<std::uint32_t>(relations_.size());
    by_name_.emplace(info.name, id);
    relations_.push_back(std::move(info));
    return id;
}

std::optional<std::uint32_t> RelationRegistry::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

}  // namespace genie::kg
