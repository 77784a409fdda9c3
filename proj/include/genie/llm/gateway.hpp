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

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "genie/llm/provider.hpp"

namespace genie::llm {

// Extra check run on a schema-valid response; returns a reason to re-ask.
using ResponseCheck = std::function<std::optional<std::string>(const nlohmann::json&)>;

class Gateway {
public:
    Gateway();  // mock
    explicit Gateway(ProviderConfig config);
    Gateway(ProviderConfig config, std::shared_ptr<Provider> provider);

    // Validated response. A response that fails the schema (or `check`) is
    // re-asked up to max_retries times, then Error(schema_violation).
    // Provider failures surface as Error(provider_timeout),
    // Error(credential_missing) or Error(provider_error).
    nlohmann::json complete(const PromptEnvelope& envelope, const ResponseCheck& check = {}) const;

    const ProviderConfig& config() const { return config_; }
    bool is_mock() const { return config_.provider == "mock"; }

private:
    ProviderConfig config_;
    std::shared_ptr<Provider> provider_;
};

// GENIE_PROVIDER, or "mock" when unset.
std::string active_provider_name();

}  // namespace genie::llm
