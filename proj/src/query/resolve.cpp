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


#include "genie/query/resolve.hpp"

#include "genie/error.hpp"
#include "genie/llm/tasks.hpp"

namespace genie::query {

Resolution resolve_entity(std::string_view mention, const Lexicon& lexicon, const llm::Gateway* gateway) {
    const auto surface = normalize(mention);
    if (surface.empty()) throw Error(ErrorCode::invalid_argument, "mention must not be empty");

    Resolution r;
    if (const auto* t = lexicon.lookup(surface); t && t->type == TargetType::node) {
        r.node_id = t->value;
        if (t->substituted_from) {
            r.kind = ResolutionKind::substitute;
            r.source = SubstituteSource::static_table;
        } else {
            r.kind = ResolutionKind::exact;
        }
        return r;
    }
    if (!gateway) return r;

    for (const auto& p : llm::propose_synonyms(*gateway, surface, lexicon.node_surfaces())) {
        const auto* t = lexicon.lookup(p);
        if (!t || t->type != TargetType::node) continue;
        if (r.proposals.empty()) {
            r.kind = ResolutionKind::substitute;
            r.source = SubstituteSource::llm;
            r.node_id = t->value;
        }
        r.proposals.push_back(normalize(p));
    }
    return r;
}

}  // namespace genie::query
