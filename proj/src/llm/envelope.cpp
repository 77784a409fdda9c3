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


#include "genie/llm/envelope.hpp"

#include <array>

namespace genie::llm {

using nlohmann::json;

namespace {

constexpr std::array kTasks = {Task::intent_classification, Task::summary,         Task::query_generation,
                               Task::relation_extraction,   Task::synonym_proposal, Task::clarification};

json string_array() { return {{"type", "array"}, {"items", {{"type", "string"}}}}; }

json object_of(json properties) {
    json required = json::array();
    for (const auto& [k, _] : properties.items()) required.push_back(k);
    return {{"type", "object"}, {"required", required}, {"properties", std::move(properties)}};
}

json build_schema(Task task) {
    switch (task) {
        case Task::intent_classification:
            return object_of({{"category",
                               {{"type", "string"},
                                {"enum",
                                 {"recipe_search", "constraint_override", "information_request",
                                  "general_clarification"}}}},
                              {"confidence", {{"type", "number"}, {"minimum", 0}, {"maximum", 1}}},
                              {"rationale", {{"type", "string"}}}});
        case Task::summary: return object_of({{"text", {{"type", "string"}}}});
        case Task::query_generation: {
            auto s = string_array();
            s["minItems"] = 1;
            return object_of({{"suggestions", s}});
        }
        case Task::relation_extraction:
            return object_of({{"relations",
                               {{"type", "array"},
                                {"items", object_of({{"subject", {{"type", "string"}}},
                                                     {"relation", {{"type", "string"}}},
                                                     {"object", {{"type", "string"}}}})}}}});
        case Task::synonym_proposal: return object_of({{"proposals", string_array()}});
        case Task::clarification: return object_of({{"question", {{"type", "string"}}}});
    }
    return json::object();
}

std::string_view instructions(Task task) {
    switch (task) {
        case Task::intent_classification:
            return "Classify the user's message as recipe_search, constraint_override, "
                   "information_request or general_clarification. Use the history to tell a new "
                   "search from a change to the last recommendation.";
        case Task::summary:
            return "Write one short paragraph per dish explaining why it was chosen. Use only the "
                   "facts given; do not introduce any number that is not in the input.";
        case Task::query_generation:
            return "Propose three short follow-up queries the user could ask next, based on the "
                   "active constraints and the dishes shown.";
        case Task::relation_extraction:
            return "Extract food knowledge statements as (subject, relation, object) triples using "
                   "only these relations: neutralizeOdor, substitutableBy, recommendsFor, "
                   "derivesFrom, containsIngredient.";
        case Task::synonym_proposal:
            return "The term is not in the vocabulary. List vocabulary entries it most likely "
                   "refers to, best first.";
        case Task::clarification:
            return "Ask the user one short question that resolves the ambiguous term.";
    }
    return "";
}

}  // namespace

std::string_view to_string(Task task) {
    switch (task) {
        case Task::intent_classification: return "intent_classification";
        case Task::summary: return "summary";
        case Task::query_generation: return "query_generation";
        case Task::relation_extraction: return "relation_extraction";
        case Task::synonym_proposal: return "synonym_proposal";
        case Task::clarification: return "clarification";
    }
    return "summary";
}

std::optional<Task> parse_task(std::string_view s) {
    for (auto t : kTasks) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

const json& response_schema(Task task) {
    static const std::array<json, kTasks.size()> schemas = [] {
        std::array<json, kTasks.size()> out;
        for (std::size_t i = 0; i < kTasks.size(); ++i) out[i] = build_schema(kTasks[i]);
        return out;
    }();
    return schemas[static_cast<std::size_t>(task)];
}

PromptEnvelope make_envelope(Task task, json inputs) {
    PromptEnvelope env;
    env.task = task;
    env.response_schema = response_schema(task);
    env.rendered_prompt = std::string(instructions(task)) + "\n\nInput:\n" + inputs.dump(2) +
                          "\n\nRespond with JSON matching:\n" + env.response_schema.dump();
    env.inputs = std::move(inputs);
    return env;
}

}  // namespace genie::llm
