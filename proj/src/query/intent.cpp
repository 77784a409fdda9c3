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


#include "genie/query/intent.hpp"

#include "genie/error.hpp"

namespace genie::query {

Intent classify_intent(std::string_view message, const TurnHistory& history, const llm::Gateway* gateway) {
    if (message.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw Error(ErrorCode::empty_message, "message is empty");
    }
    static const llm::Gateway rules;
    const auto& gw = gateway ? *gateway : rules;
    const auto response = gw.complete(llm::make_envelope(llm::Task::intent_classification,
                                                         {{"message", std::string(message)},
                                                          {"history", history.messages},
                                                          {"has_recommendation", history.has_recommendation}}));
    Intent intent;
    intent.category = *parse_intent_category(response.at("category").get<std::string>());
    intent.confidence = response.at("confidence").get<double>();
    intent.rationale = response.at("rationale").get<std::string>();
    return intent;
}

}  // namespace genie::query
