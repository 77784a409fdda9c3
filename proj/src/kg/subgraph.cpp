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


#include "genie/kg/subgraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "genie/error.hpp"

namespace genie::kg {

std::string_view to_string(DiffMarker marker) {
    switch (marker) {
        case DiffMarker::kept: return "kept";
        case DiffMarker::added: return "added";
        case DiffMarker::removed_fading: return "removed-fading";
    }
    return "kept";
}

SubgraphView extract_subgraph(const GraphSnapshot& snapshot, std::span<const std::string> seeds,
                              int hop_budget, int node_budget,
                              const std::unordered_set<std::string>& blocked) {
    if (seeds.empty()) throw Error(ErrorCode::invalid_argument, "seeds must not be empty");
    if (hop_budget < 1 || node_budget < 1) {
        throw Error(ErrorCode::invalid_argument, "hop and node budgets must be >= 1");
    }

    SubgraphView view;
    std::unordered_map<NodeIndex, std::size_t> admitted;  // index -> position in view.nodes
    std::vector<NodeIndex> frontier;

    auto admit = [&](NodeIndex i) {
        admitted.emplace(i, view.nodes.size());
        view.nodes.push_back(snapshot.at(i).id);
    };

    for (const auto& s : seeds) {
        const auto i = snapshot.index_of(s);
        if (!i) throw Error(ErrorCode::unknown_node, "unknown seed: " + s);
        if (admitted.contains(*i)) continue;
        admit(*i);
        frontier.push_back(*i);
    }

    const auto budget = static_cast<std::size_t>(node_budget);
    const auto& relations = snapshot.relations();
    std::vector<const AdjEntry*> candidates;
    for (int hop = 0; hop < hop_budget && view.nodes.size() < budget && !frontier.empty(); ++hop) {
        std::vector<NodeIndex> next;
        for (const auto u : frontier) {
            // Merge both directions into one (relation, neighbor id) ordered list.
            candidates.clear();
            for (const auto& e : snapshot.out_edges(u)) candidates.push_back(&e);
            for (const auto& e : snapshot.in_edges(u)) candidates.push_back(&e);
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](const AdjEntry* a, const AdjEntry* b) {
                                 const auto& ra = relations.name(a->relation);
                                 const auto& rb = relations.name(b->relation);
                                 if (ra != rb) return ra < rb;
                                 return snapshot.at(a->neighbor).id < snapshot.at(b->neighbor).id;
                             });
            for (const auto* e : candidates) {
                if (view.nodes.size() >= budget) break;
                if (admitted.contains(e->neighbor)) continue;
                if (!blocked.empty() && blocked.contains(snapshot.at(e->neighbor).id)) continue;
                admit(e->neighbor);
                next.push_back(e->neighbor);
            }
            if (view.nodes.size() >= budget) break;
        }
        frontier = std::move(next);
    }

    for (const auto& [u, pos] : admitted) {
        for (const auto& e : snapshot.out_edges(u)) {
            if (admitted.contains(e.neighbor)) {
                view.edges.push_back({snapshot.at(u).id, relations.name(e.relation),
                                      snapshot.at(e.neighbor).id});
            }
        }
    }
    std::sort(view.edges.begin(), view.edges.end());
    return view;
}

}  // namespace genie::kg
