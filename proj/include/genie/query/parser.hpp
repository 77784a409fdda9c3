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

#include <string_view>

#include "genie/kg/snapshot.hpp"
#include "genie/llm/gateway.hpp"
#include "genie/query/constraint.hpp"
#include "genie/query/lexicon.hpp"
#include "genie/query/resources.hpp"

namespace genie::query {

struct ParseOptions {
    const llm::Gateway* gateway = nullptr;  // synonym proposals for unknown mentions
    int turn = 0;
};

// Turns one message into constraints, clarifications and flagged conflicts.
//
// Negation cues ("no", "without", "avoid", "dislike", ...) apply to the
// nearest following mention in the same clause. Direction words ("reduce",
// "lower", "more", ...) apply to every nutrient after them in the clause and
// use the configured default caps. Subjective words become clarifications.
//
// Throws Error(no_parsable_content) when a constraint-bearing intent yields
// nothing.
ConstraintSet parse_constraints(std::string_view message, const Intent& intent, const kg::GraphSnapshot& snapshot,
                                const Lexicon& lexicon, const ParserResources& resources,
                                const ParseOptions& options = {});

// Terms routed to clarification and the readings offered for them.
const std::vector<std::string>& subjective_readings();

}  // namespace genie::query
