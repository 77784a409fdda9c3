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


#include "genie/kg/snapshot.hpp"

#include <algorithm>
#include <cmath>

#include "genie/error.hpp"

namespace genie::kg {

GraphSnapshot::GraphSnapshot() : GraphSnapshot(RelationRegistry::seeded()) {}

GraphSnapshot::GraphSnapshot(RelationRegistry relations, std::uint64_t version)
    : version_(version),
      relations_(std::make_shared<const RelationRegistry>(std::move(relations))),
      index_(std::make_shared<const IdIndex>()) {}

const EntityNode* GraphSnapshot::find(std::string_view id) const {
    auto i = index_of(id);
    return i ? nodes_[*i].get() : nullptr;
}

const EntityNode& GraphSnapshot::node(std::string_view id) const {
    if (const auto* n = find(id)) return *n;
    throw Error(ErrorCode::unknown_node, "unknown node: " + std::string(id));
}

std::optional<NodeIndex> GraphSnapshot::index_of(std::string_view id) const {
    auto it = index_->find(std::string(id));
    if (it == index_->end()) return std::nullopt;
    return it->second;
}

std::vector<Neighbor> GraphSnapshot::neighbors(std::string_view id,
                                               std::optional<std::string_view> relation,
                                               Direction direction) const {
    const auto idx = index_of(id);
    if (!idx) throw Error(ErrorCode::unknown_node, "unknown node: " + std::string(id));

    std::optional<std::uint32_t> rel_id;
    if (relation) {
        rel_id = relations_->find(*relation);
        if (!rel_id) return {};
    }

    std::vector<Neighbor> result;
    auto collect = [&](std::span<const AdjEntry> list) {
        for (const auto& e : list) {
            if (rel_id && e.relation != *rel_id) continue;
            result.push_back({relations_->name(e.relation), nodes_[e.neighbor]->id});
        }
    };
    if (direction != Direction::in) collect(*out_[*idx]);
    if (direction != Direction::out) collect(*in_[*idx]);

    if (direction == Direction::both) {
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
    }
    return result;
}

bool GraphSnapshot::has_triple(const Triple& t) const { return edge(t).has_value(); }

std::optional<RelationEdge> GraphSnapshot::edge(const Triple& t) const {
    const auto s = index_of(t.subject);
    const auto o = index_of(t.object);
    const auto r = relations_->find(t.relation);
    if (!s || !o || !r) return std::nullopt;
    for (const auto& e : *out_[*s]) {
        if (e.relation == *r && e.neighbor == *o) {
            return RelationEdge{t.subject, t.relation, t.object, e.provenance, e.version};
        }
    }
    return std::nullopt;
}

std::vector<RelationEdge> GraphSnapshot::edges() const {
    std::vector<RelationEdge> result;
    result.reserve(triple_count_);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (const auto& e : *out_[i]) {
            result.push_back({nodes_[i]->id, relations_->name(e.relation), nodes_[e.neighbor]->id,
                              e.provenance, e.version});
        }
    }
    std::sort(result.begin(), result.end(), [](const RelationEdge& a, const RelationEdge& b) {
        return a.triple() < b.triple();
    });
    return result;
}

std::vector<const EntityNode*> GraphSnapshot::nodes() const {
    std::vector<const EntityNode*> result;
    result.reserve(nodes_.size());
    for (const auto& n : nodes_) result.push_back(n.get());
    std::sort(result.begin(), result.end(),
              [](const EntityNode* a, const EntityNode* b) { return a->id < b->id; });
    return result;
}

std::vector<std::string> GraphSnapshot::ids_of_kind(NodeKind kind) const {
    std::vector<std::string> result;
    for (const auto& n : nodes_) {
        if (n->kind == kind) result.push_back(n->id);
    }
    std::sort(result.begin(), result.end());
    return result;
}

void GraphSnapshot::sort_adjacency(AdjList& list) const {
    std::sort(list.begin(), list.end(), [this](const AdjEntry& a, const AdjEntry& b) {
        if (a.relation != b.relation) {
            return relations_->name(a.relation) < relations_->name(b.relation);
        }
        return nodes_[a.neighbor]->id < nodes_[b.neighbor]->id;
    });
}

namespace {

void validate_node(const EntityNode& n) {
    if (n.id.empty()) throw Error(ErrorCode::invalid_argument, "node id must not be empty");
    if (n.label.empty()) {
        throw Error(ErrorCode::invalid_argument, "node " + n.id + " has an empty label");
    }
    for (const auto& [name, q] : n.numeric_attrs) {
        if (!std::isfinite(q.value) || q.value < 0.0) {
            throw Error(ErrorCode::invalid_argument,
                        "node " + n.id + ": attribute " + name + " must be finite and >= 0");
        }
    }
}

}  // namespace

GraphSnapshot GraphSnapshot::build(std::vector<EntityNode> nodes,
                                   const std::vector<RelationEdge>& edges,
                                   RelationRegistry relations, std::uint64_t version) {
    GraphSnapshot snap(std::move(relations), version);

    auto index = std::make_shared<IdIndex>();
    index->reserve(nodes.size());
    snap.nodes_.reserve(nodes.size());
    for (auto& n : nodes) {
        validate_node(n);
        const auto idx = static_cast<NodeIndex>(snap.nodes_.size());
        if (!index->emplace(n.id, idx).second) {
            throw Error(ErrorCode::invalid_argument, "duplicate node id: " + n.id);
        }
        snap.nodes_.push_back(std::make_shared<const EntityNode>(std::move(n)));
    }
    snap.index_ = index;

    std::vector<AdjList> out(snap.nodes_.size());
    std::vector<AdjList> in(snap.nodes_.size());
    for (const auto& e : edges) {
        const auto s = index->find(e.subject);
        const auto o = index->find(e.object);
        if (s == index->end() || o == index->end()) {
            throw Error(ErrorCode::dangling_reference,
                        "edge (" + e.subject + ", " + e.relation + ", " + e.object + ")");
        }
        const auto r = snap.relations_->find(e.relation);
        if (!r) throw Error(ErrorCode::unknown_relation, "unknown relation: " + e.relation);
        const auto v = static_cast<std::uint32_t>(e.version ? e.version : version);
        out[s->second].push_back({*r, o->second, v, e.provenance});
        in[o->second].push_back({*r, s->second, v, e.provenance});
    }

    snap.out_.reserve(out.size());
    snap.in_.reserve(in.size());
    std::size_t count = 0;
    auto dedupe = [](AdjList& list) {
        list.erase(std::unique(list.begin(), list.end(),
                               [](const AdjEntry& a, const AdjEntry& b) {
                                   return a.relation == b.relation && a.neighbor == b.neighbor;
                               }),
                   list.end());
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        snap.sort_adjacency(out[i]);
        dedupe(out[i]);
        snap.sort_adjacency(in[i]);
        dedupe(in[i]);
        count += out[i].size();
        snap.out_.push_back(std::make_shared<const AdjList>(std::move(out[i])));
        snap.in_.push_back(std::make_shared<const AdjList>(std::move(in[i])));
    }
    snap.triple_count_ = count;
    return snap;
}

std::optional<GraphSnapshot> GraphSnapshot::apply(const UpsertBatch& batch) const {
    GraphSnapshot next = *this;
    next.version_ = version_ + 1;
    bool changed = false;

    std::shared_ptr<IdIndex> grown;  // copied lazily when a new id appears
    for (const auto& n : batch.nodes) {
        validate_node(n);
        if (auto idx = next.index_of(n.id)) {
            if (*next.nodes_[*idx] == n) continue;
            next.nodes_[*idx] = std::make_shared<const EntityNode>(n);
        } else {
            if (!grown) {
                grown = std::make_shared<IdIndex>(*next.index_);
                next.index_ = grown;
            }
            const auto i = static_cast<NodeIndex>(next.nodes_.size());
            grown->emplace(n.id, i);
            next.nodes_.push_back(std::make_shared<const EntityNode>(n));
            next.out_.push_back(std::make_shared<const AdjList>());
            next.in_.push_back(std::make_shared<const AdjList>());
        }
        changed = true;
    }

    for (const auto& e : batch.edges) {
        const auto r = next.relations_->find(e.relation);
        if (!r) throw Error(ErrorCode::unknown_relation, "unknown relation: " + e.relation);
        const auto s = next.index_of(e.subject);
        const auto o = next.index_of(e.object);
        if (!s || !o) {
            throw Error(ErrorCode::dangling_reference,
                        "edge (" + e.subject + ", " + e.relation + ", " + e.object + ")");
        }
        const auto& current = *next.out_[*s];
        const bool present = std::any_of(current.begin(), current.end(), [&](const AdjEntry& a) {
            return a.relation == *r && a.neighbor == *o;
        });
        if (present) continue;

        const auto v = static_cast<std::uint32_t>(next.version_);
        auto out_list = std::make_shared<AdjList>(current);
        out_list->push_back({*r, *o, v, e.provenance});
        next.sort_adjacency(*out_list);
        next.out_[*s] = out_list;

        auto in_list = std::make_shared<AdjList>(*next.in_[*o]);
        in_list->push_back({*r, *s, v, e.provenance});
        next.sort_adjacency(*in_list);
        next.in_[*o] = in_list;

        ++next.triple_count_;
        changed = true;
    }

    if (!changed) return std::nullopt;
    return next;
}

}  // namespace genie::kg
