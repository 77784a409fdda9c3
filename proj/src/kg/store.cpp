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


#include "genie/kg/store.hpp"

#include <algorithm>
#include <chrono>

#include "genie/error.hpp"
#include "json.hpp"

namespace genie::kg {

namespace {

using nlohmann::json;

std::int64_t wall_clock_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

json node_json(const EntityNode& n) {
    json numeric = json::object();
    for (const auto& [k, q] : n.numeric_attrs) {
        numeric[k] = {{"value", q.value}, {"unit", to_string(q.unit)}};
    }
    return {{"id", n.id},
            {"label", n.label},
            {"kind", to_string(n.kind)},
            {"numeric_attrs", numeric},
            {"categorical_attrs", n.categorical_attrs}};
}

EntityNode node_from_json(const json& j) {
    EntityNode n;
    n.id = j.at("id").get<std::string>();
    n.label = j.at("label").get<std::string>();
    n.kind = parse_node_kind(j.at("kind").get<std::string>()).value_or(NodeKind::ingredient);
    for (const auto& [k, v] : j.at("numeric_attrs").items()) {
        n.numeric_attrs[k] = {v.at("value").get<double>(),
                              parse_unit(v.at("unit").get<std::string>()).value_or(Unit::none)};
    }
    n.categorical_attrs = j.at("categorical_attrs").get<std::map<std::string, std::string>>();
    return n;
}

}  // namespace

std::string to_ndjson(const AuditRecord& r) {
    json j = {{"version", r.version}, {"op", r.op}, {"timestamp", r.timestamp}};
    if (r.triple) {
        j["triple"] = {{"subject", r.triple->subject},
                       {"relation", r.triple->relation},
                       {"object", r.triple->object},
                       {"provenance", to_string(r.triple->provenance)}};
    }
    if (r.node) j["node"] = node_json(*r.node);
    return j.dump();
}

AuditRecord audit_from_ndjson(const std::string& line) {
    const auto j = json::parse(line);
    AuditRecord r;
    r.version = j.at("version").get<std::uint64_t>();
    r.op = j.at("op").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::int64_t>();
    if (j.contains("triple")) {
        const auto& t = j["triple"];
        r.triple = RelationEdge{t.at("subject").get<std::string>(), t.at("relation").get<std::string>(),
                                t.at("object").get<std::string>(),
                                parse_provenance(t.at("provenance").get<std::string>())
                                    .value_or(Provenance::curated),
                                r.version};
    }
    if (j.contains("node")) r.node = node_from_json(j["node"]);
    return r;
}

KgStore::KgStore(GraphSnapshot base, StoreOptions options)
    : base_(std::make_shared<const GraphSnapshot>(std::move(base))), options_(std::move(options)) {
    if (!options_.clock) options_.clock = wall_clock_ms;
    if (options_.retention == 0) options_.retention = 1;
    recent_.push_back(base_);
}

std::shared_ptr<const GraphSnapshot> KgStore::current() const {
    std::shared_lock lock(mutex_);
    return recent_.back();
}

std::shared_ptr<const GraphSnapshot> KgStore::at(std::uint64_t version) const {
    std::vector<AuditRecord> records;
    {
        std::shared_lock lock(mutex_);
        for (const auto& s : recent_) {
            if (s->version() == version) return s;
        }
        if (version == base_->version()) return base_;
        if (version < base_->version() || version > recent_.back()->version()) {
            throw Error(ErrorCode::invalid_argument, "no such version: " + std::to_string(version));
        }
        records = audit_;
    }

    // Rebuild from the base by replaying the audit log one version at a time.
    GraphSnapshot snap = *base_;
    std::size_t i = 0;
    while (snap.version() < version) {
        UpsertBatch batch;
        const auto target = snap.version() + 1;
        for (; i < records.size() && records[i].version == target; ++i) {
            if (records[i].node) batch.nodes.push_back(*records[i].node);
            if (records[i].triple) batch.edges.push_back(*records[i].triple);
        }
        auto next = snap.apply(batch);
        if (!next) throw Error(ErrorCode::invalid_argument, "audit log gap at " + std::to_string(target));
        snap = std::move(*next);
    }
    return std::make_shared<const GraphSnapshot>(std::move(snap));
}

std::shared_ptr<const GraphSnapshot> KgStore::upsert_edge(const RelationEdge& edge,
                                                          std::optional<std::uint64_t> expected) {
    UpsertBatch batch;
    batch.edges.push_back(edge);
    return upsert(batch, expected);
}

std::shared_ptr<const GraphSnapshot> KgStore::upsert(const UpsertBatch& batch,
                                                     std::optional<std::uint64_t> expected) {
    std::lock_guard writer(write_mutex_);
    auto head = current();
    if (expected && *expected != head->version()) {
        throw Error(ErrorCode::version_conflict,
                    "expected version " + std::to_string(*expected) + ", store is at " +
                        std::to_string(head->version()));
    }
    auto next = head->apply(batch);
    if (!next) return head;

    auto published = std::make_shared<const GraphSnapshot>(std::move(*next));
    const auto v = published->version();
    const auto ts = options_.clock();

    std::vector<AuditRecord> records;
    for (const auto& n : batch.nodes) {
        const auto* before = head->find(n.id);
        if (before && *before == n) continue;
        records.push_back({v, "upsert_node", std::nullopt, n, ts});
    }
    for (const auto& e : batch.edges) {
        if (head->has_triple(e.triple())) continue;
        RelationEdge stored = e;
        stored.version = v;
        if (std::any_of(records.begin(), records.end(), [&](const AuditRecord& r) {
                return r.triple && r.triple->triple() == e.triple();
            })) {
            continue;
        }
        records.push_back({v, "add_edge", stored, std::nullopt, ts});
    }

    std::unique_lock lock(mutex_);
    recent_.push_back(published);
    while (recent_.size() > options_.retention) recent_.pop_front();
    for (auto& r : records) {
        if (options_.audit_sink) *options_.audit_sink << to_ndjson(r) << '\n';
        audit_.push_back(std::move(r));
    }
    return published;
}

std::vector<AuditRecord> KgStore::audit_log() const {
    std::shared_lock lock(mutex_);
    return audit_;
}

std::vector<std::uint64_t> KgStore::retained_versions() const {
    std::shared_lock lock(mutex_);
    std::vector<std::uint64_t> out;
    for (const auto& s : recent_) out.push_back(s->version());
    return out;
}

}  // namespace genie::kg
