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

#include <memory>
#include <string>

#include "genie/llm/envelope.hpp"

namespace genie::llm {

struct ProviderConfig {
    std::string provider = "mock";  // mock, provider_a .. provider_d
    std::string endpoint;
    std::string credential_env;
    int timeout_ms = 10000;
    int max_retries = 2;
};

// Throws Error(config_error) naming the offending key.
void validate(const ProviderConfig& config);

class Provider {
public:
    virtual ~Provider() = default;
    virtual std::string name() const = 0;
    // Raw structured output; validation is the gateway's job.
    virtual nlohmann::json complete(const PromptEnvelope& envelope) = 0;
};

// Offline provider. Every response is a fixed function of the envelope's
// inputs.
class MockProvider : public Provider {
public:
    std::string name() const override { return "mock"; }
    nlohmann::json complete(const PromptEnvelope& envelope) override;
};

// POSTs {task, prompt, inputs, schema} to the endpoint with a bearer token
// read from the configured environment variable, and expects
// {"output": {...}} back.
class HttpProvider : public Provider {
public:
    explicit HttpProvider(ProviderConfig config);
    std::string name() const override { return config_.provider; }
    nlohmann::json complete(const PromptEnvelope& envelope) override;

private:
    ProviderConfig config_;
};

std::unique_ptr<Provider> make_provider(const ProviderConfig& config);

}  // namespace genie::llm
