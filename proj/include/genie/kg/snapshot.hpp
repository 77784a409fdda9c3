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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genie/kg/types.hpp"

namespace genie::kg {

using NodeIndex = std::uint32_t;

struct Neighbor {
    std::string relation;
    std::string id;

    auto operator<=>(const Neighbor&) const = default;
};

// One adjacency slot. Lists are kept sorted by (relation name, neighbor id).
struct AdjEntry {
    std::uint32_t relation = 0;
    NodeIndex neighbor = 0;
    std::uint32_t version = 0;
    Provenance provenance = Provenance::curated;
};

// Nodes and edges written together as one version step.
struct UpsertBatch {
    std::vector<EntityNode> nodes;
    std::vector<RelationEdge> edges;
};

// Immutable view of the graph at one version. Copies share node and
// adjacency storage, so publishing a new version only duplicates the lists
// that a write touched.
class GraphSnapshot {
public:
    // Empty graph, version 1, seeded relation registry.
    GraphSnapshot();
    explicit GraphSnapshot(RelationRegistry relations, std::uint64_t version = 1);

    std::uint64_t version() const { return version_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t triple_count() const { return triple_count_; }
    const RelationRegistry& relations() const { return *relations_; }

    const EntityNode* find(std::string_view id) const;
    // Throws Error(unknown_node).
    const EntityNode& node(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    // Complete, duplicate-free, ordered by (relation, neighbor id).
    // Throws Error(unknown_node).
    std::vector<Neighbor> neighbors(std::string_view id,
                                    std::optional<std::string_view> relation = std::nullopt,
                                    Direction direction = Direction::out) const;

    bool has_triple(const Triple& t) const;
    std::optional<RelationEdge> edge(const Triple& t) const;

    // Every edge, ordered by (subject, relation, object).
    std::vector<RelationEdge> edges() const;
    // Every node, ordered by id.
    std::vector<const EntityNode*> nodes() const;
    std::vector<std::string> ids_of_kind(NodeKind kind) const;

    // Applies a batch on top of this snapshot. Nodes are inserted or replaced;
    // edges already present are skipped. Returns std::nullopt when the batch
    // changes nothing. Throws Error(dangling_reference) for an edge endpoint
    // that exists neither here nor in the batch, and Error(unknown_relation)
    // for a relation missing from the registry.
    std::optional<GraphSnapshot> apply(const UpsertBatch& batch) const;

    // Index-level access for traversal code.
    std::optional<NodeIndex> index_of(std::string_view id) const;
    const EntityNode& at(NodeIndex i) const { return *nodes_[i]; }
    std::span<const AdjEntry> out_edges(NodeIndex i) const { return *out_[i]; }
    std::span<const AdjEntry> in_edges(NodeIndex i) const { return *in_[i]; }

    // Bulk construction used by the CSV loader. Edges must reference nodes
    // in `nodes` and relations in `relations`; duplicates are dropped.
    static GraphSnapshot build(std::vector<EntityNode> nodes, const std::vector<RelationEdge>& edges,
                               RelationRegistry relations, std::uint64_t version);

private:
    using AdjList = std::vector<AdjEntry>;
    using IdIndex = std::unordered_map<std::string, NodeIndex>;

    void sort_adjacency(AdjList& list) const;

    std::uint64_t version_ = 1;
    std::size_t triple_count_ = 0;
    std::shared_ptr<const RelationRegistry> relations_;
    std::shared_ptr<const IdIndex> index_;
    std::vector<std::shared_ptr<const EntityNode>> nodes_;
    std::vector<std::shared_ptr<const AdjList>> out_;
    std::vector<std::shared_ptr<const AdjList>> in_;
};

}  // namespace genie::kg
