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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genie/llm/gateway.hpp"
#include "genie/query/lexicon.hpp"

namespace genie::query {

enum class ResolutionKind { exact, substitute, unresolved };
enum class SubstituteSource { static_table, llm };

struct Resolution {
    ResolutionKind kind = ResolutionKind::unresolved;
    std::string node_id;  // exact and substitute
    std::optional<SubstituteSource> source;
    // Canonical surfaces offered for confirmation (llm proposals).
    std::vector<std::string> proposals;

    bool operator==(const Resolution&) const = default;
};

// Exact label or lexicon match first, then the static synonym table, then
// (when a gateway is given) LLM-proposed synonyms, which are returned as
// proposals needing confirmation.
Resolution resolve_entity(std::string_view mention, const Lexicon& lexicon, const llm::Gateway* gateway = nullptr);

}  // namespace genie::query
