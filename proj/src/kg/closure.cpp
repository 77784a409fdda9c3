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


#include "genie/kg/closure.hpp"

#include <algorithm>

#include "genie/error.hpp"

namespace genie::kg {

bool is_composition_relation(std::string_view relation) {
    return relation == rel::contains || relation == rel::contains_ingredient || relation == rel::derives_from;
}

std::vector<std::string> contains_closure(const GraphSnapshot& snapshot, std::string_view id) {
    const auto start = snapshot.index_of(id);
    if (!start) throw Error(ErrorCode::unknown_node, "unknown node: " + std::string(id));
    const auto& relations = snapshot.relations();
    std::vector<bool> follow(relations.size());
    for (std::uint32_t r = 0; r < relations.size(); ++r) follow[r] = is_composition_relation(relations.name(r));

    std::vector<NodeIndex> stack{*start};
    std::vector<NodeIndex> seen{*start};
    std::vector<std::string> out;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (const auto& e : snapshot.out_edges(u)) {
            if (!follow[e.relation]) continue;
            if (std::find(seen.begin(), seen.end(), e.neighbor) != seen.end()) continue;
            seen.push_back(e.neighbor);
            stack.push_back(e.neighbor);
            out.push_back(snapshot.at(e.neighbor).id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> categorical_values(const GraphSnapshot& snapshot, const std::vector<std::string>& ids) {
    std::set<std::string> out;
    for (const auto& id : ids) {
        if (const auto* n = snapshot.find(id)) {
            for (const auto& [_, v] : n->categorical_attrs) out.insert(v);
        }
    }
    return out;
}

}  // namespace genie::kg
