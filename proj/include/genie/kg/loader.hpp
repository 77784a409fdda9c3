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

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "genie/kg/snapshot.hpp"

namespace genie::kg {

struct LoadOptions {
    // Fail on the first bad row instead of skipping and reporting it.
    bool strict = false;
    RelationRegistry relations = RelationRegistry::seeded();
};

struct RejectedRow {
    std::string source;  // "triples" or "attrs"
    std::size_t line = 0;
    std::string reason;
};

struct LoadReport {
    std::size_t triple_rows = 0;
    std::size_t attr_rows = 0;
    std::size_t duplicate_triples = 0;
    std::vector<RejectedRow> rejected;
};

struct LoadResult {
    GraphSnapshot snapshot;
    LoadReport report;
};

// Reads triples.csv (subject,relation,object,provenance) and attrs.csv
// (node_id,attr,value,unit,kind_hint,label) into a version-1 snapshot.
//
// Rows with an empty `attr` declare a node. Rows with a unit carry a numeric
// attribute (mg is stored as g); rows without a unit carry a categorical one.
// Triple endpoints that are never declared are created with a kind inferred
// from the relation they take part in. Recipes left without any `contains`
// edge are dropped and reported.
//
// In strict mode the first problem throws Error(malformed_row),
// Error(unknown_relation) or Error(dangling_reference); strict mode also
// requires every triple endpoint to be declared in attrs.
LoadResult load_triples(std::istream& triples, std::istream& attrs, const LoadOptions& options = {});

// Canonical exports. Rows are sorted; each node gets one declaration row
// followed by one row per attribute.
void export_triples(const GraphSnapshot& snapshot, std::ostream& out);
void export_attrs(const GraphSnapshot& snapshot, std::ostream& out);

inline constexpr const char* kTriplesHeader = "subject,relation,object,provenance";
inline constexpr const char* kAttrsHeader = "node_id,attr,value,unit,kind_hint,label";

}  // namespace genie::kg
