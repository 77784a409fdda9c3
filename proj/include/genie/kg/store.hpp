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
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <vector>

#include "genie/kg/snapshot.hpp"

namespace genie::kg {

struct AuditRecord {
    std::uint64_t version = 0;
    std::string op;  // "add_edge" or "upsert_node"
    std::optional<RelationEdge> triple;
    std::optional<EntityNode> node;
    std::int64_t timestamp = 0;  // ms since epoch

    bool operator==(const AuditRecord&) const = default;
};

// One newline-delimited JSON object per record.
std::string to_ndjson(const AuditRecord& record);
AuditRecord audit_from_ndjson(const std::string& line);

struct StoreOptions {
    std::size_t retention = 16;
    // Optional sink that receives every audit line as it is appended.
    std::ostream* audit_sink = nullptr;
    std::function<std::int64_t()> clock;
};

// Versioned graph store: many readers share immutable snapshots, a single
// writer path publishes new versions. The base snapshot and the last
// `retention` versions stay in memory; anything in between is rebuilt from
// the audit log on demand.
class KgStore {
public:
    explicit KgStore(GraphSnapshot base, StoreOptions options = {});

    std::shared_ptr<const GraphSnapshot> current() const;
    std::uint64_t version() const { return current()->version(); }

    // Throws Error(invalid_argument) for a version that never existed.
    std::shared_ptr<const GraphSnapshot> at(std::uint64_t version) const;

    // Publishes version+1 unless the edge already exists (then the current
    // snapshot is returned unchanged). When `expected_version` is given and
    // differs from the current version, throws Error(version_conflict).
    std::shared_ptr<const GraphSnapshot> upsert_edge(
        const RelationEdge& edge, std::optional<std::uint64_t> expected_version = std::nullopt);

    std::shared_ptr<const GraphSnapshot> upsert(
        const UpsertBatch& batch, std::optional<std::uint64_t> expected_version = std::nullopt);

    std::vector<AuditRecord> audit_log() const;
    std::vector<std::uint64_t> retained_versions() const;

private:
    std::shared_ptr<const GraphSnapshot> base_;
    StoreOptions options_;

    mutable std::shared_mutex mutex_;
    std::mutex write_mutex_;
    std::deque<std::shared_ptr<const GraphSnapshot>> recent_;
    std::vector<AuditRecord> audit_;
};

}  // namespace genie::kg
