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

#include "genie/kg/snapshot.hpp"
#include "genie/query/constraint.hpp"
#include "genie/query/resources.hpp"

namespace genie::query {

// Ref plus value: "flag:isVegan=true", "bound:protein:max=<15g",
// "include:Cheese". Conflicts name their two sides this way.
std::string signature(const Constraint& c);

// True for: the same ref with different values; include and exclude of the
// same node; a lower and an upper bound on one attribute that no value can
// meet; a true flag and an included node whose composition carries a class
// the flag forbids.
bool contradicts(const Constraint& a, const Constraint& b, const kg::GraphSnapshot& snapshot,
                 const Entailments& entailments);

// Flags every contradicting pair among active, resolved, non-learned
// constraints as an unresolved conflict. Conflicts already marked resolved
// are kept as they are.
ConstraintSet detect_conflicts(ConstraintSet set, const kg::GraphSnapshot& snapshot, const Entailments& entailments);

}  // namespace genie::query
