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

#include "json.hpp"

namespace genie::llm {

enum class Task {
    intent_classification,
    summary,
    query_generation,
    relation_extraction,
    synonym_proposal,
    clarification,
};

std::string_view to_string(Task task);
std::optional<Task> parse_task(std::string_view s);

struct PromptEnvelope {
    Task task = Task::summary;
    nlohmann::json inputs = nlohmann::json::object();
    std::string rendered_prompt;
    nlohmann::json response_schema;
};

// Expected response shape for a task.
const nlohmann::json& response_schema(Task task);

// Renders the task template over `inputs`. Same inputs, same prompt.
PromptEnvelope make_envelope(Task task, nlohmann::json inputs);

}  // namespace genie::llm
