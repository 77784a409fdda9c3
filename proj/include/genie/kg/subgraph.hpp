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

#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "genie/kg/snapshot.hpp"

namespace genie::kg {

enum class DiffMarker { kept, added, removed_fading };

std::string_view to_string(DiffMarker marker);

struct SubgraphView {
    // Admission order: seeds first, then breadth-first discoveries.
    std::vector<std::string> nodes;
    // Every edge of the snapshot whose endpoints are both in `nodes`,
    // ordered by (subject, relation, object).
    std::vector<Triple> edges;
    int detail_level = 1;
    std::map<std::string, DiffMarker> diff;  // only set by adaptive recomputation
    std::vector<std::string> highlights;

    bool operator==(const SubgraphView&) const = default;
};

// Breadth-first expansion from all seeds at once, following edges in both
// directions. Stops after `hop_budget` hops or once `node_budget` nodes are
// admitted, whichever comes first; seeds are always admitted. Neighbors are
// admitted in (relation, neighbor id) order so the result is deterministic.
// Nodes in `blocked` are never admitted (a blocked seed is still kept).
//
// Throws Error(unknown_node) for an unresolvable seed and
// Error(invalid_argument) for empty seeds or budgets below 1.
SubgraphView extract_subgraph(const GraphSnapshot& snapshot, std::span<const std::string> seeds,
                              int hop_budget, int node_budget,
                              const std::unordered_set<std::string>& blocked = {});

}  // namespace genie::kg
