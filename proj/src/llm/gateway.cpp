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


#include "genie/llm/gateway.hpp"

#include <cstdlib>

#include "genie/error.hpp"
#include "genie/llm/schema.hpp"

namespace genie::llm {

Gateway::Gateway() : Gateway(ProviderConfig{}) {}

Gateway::Gateway(ProviderConfig config) : config_(std::move(config)), provider_(make_provider(config_)) {}

Gateway::Gateway(ProviderConfig config, std::shared_ptr<Provider> provider)
    : config_(std::move(config)), provider_(std::move(provider)) {
    validate(config_);
}

nlohmann::json Gateway::complete(const PromptEnvelope& envelope, const ResponseCheck& check) const {
    std::string last_error;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        auto response = provider_->complete(envelope);
        auto error = validate(response, envelope.response_schema);
        if (!error && check) error = check(response);
        if (!error) return response;
        last_error = *error;
    }
    throw Error(ErrorCode::schema_violation, std::string(to_string(envelope.task)) + " response rejected after " +
                                                 std::to_string(config_.max_retries + 1) +
                                                 " attempts: " + last_error);
}

std::string active_provider_name() {
    const char* p = std::getenv("GENIE_PROVIDER");
    return p && *p ? p : "mock";
}

}  // namespace genie::llm
