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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "genie/kg/snapshot.hpp"

namespace genie::kg {

// Relations followed when asking what a dish is made of.
bool is_composition_relation(std::string_view relation);

// Every node reachable from `id` over contains, containsIngredient and
// derivesFrom edges, excluding `id` itself. Sorted by id.
std::vector<std::string> contains_closure(const GraphSnapshot& snapshot, std::string_view id);

// Values of all categorical attributes of the given nodes.
std::set<std::string> categorical_values(const GraphSnapshot& snapshot, const std::vector<std::string>& ids);

}  // namespace genie::kg
