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

#include "json.hpp"

namespace genie::llm {

// Checks `value` against a small JSON-Schema subset: type (object, array,
// string, number, integer, boolean), properties, required, items, enum,
// minimum, maximum, minItems. Returns a description of the first mismatch,
// or std::nullopt when the value conforms.
std::optional<std::string> validate(const nlohmann::json& value, const nlohmann::json& schema);

}  // namespace genie::llm
