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

#include <string>
#include <string_view>
#include <vector>

#include "genie/llm/gateway.hpp"
#include "genie/query/constraint.hpp"

namespace genie::query {

struct TurnHistory {
    std::vector<std::string> messages;
    bool has_recommendation = false;
};

// Throws Error(empty_message) for a blank message. Without a gateway the
// offline rule classifier is used.
Intent classify_intent(std::string_view message, const TurnHistory& history = {},
                       const llm::Gateway* gateway = nullptr);

inline bool constraint_bearing(IntentCategory c) {
    return c == IntentCategory::recipe_search || c == IntentCategory::constraint_override;
}

}  // namespace genie::query
