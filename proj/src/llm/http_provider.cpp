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


#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "genie/error.hpp"
#include "genie/llm/provider.hpp"
#include "httplib.h"

namespace genie::llm {

using nlohmann::json;

namespace {

const char* const kProviders[] = {"mock", "provider_a", "provider_b", "provider_c", "provider_d"};

// "http://host:8080/v1/complete" -> {"http://host:8080", "/v1/complete"}
std::pair<std::string, std::string> split_url(const std::string& url) {
    const auto scheme = url.find("://");
    const auto path = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (path == std::string::npos) return {url, "/"};
    return {url.substr(0, path), url.substr(path)};
}

}  // namespace

void validate(const ProviderConfig& config) {
    if (std::find(std::begin(kProviders), std::end(kProviders), config.provider) == std::end(kProviders)) {
        throw Error(ErrorCode::config_error, "provider: unknown provider '" + config.provider + "'");
    }
    if (config.timeout_ms <= 0) throw Error(ErrorCode::config_error, "timeout_ms: must be > 0");
    if (config.max_retries < 0) throw Error(ErrorCode::config_error, "max_retries: must be >= 0");
    if (config.provider == "mock") return;
    if (config.endpoint.empty()) throw Error(ErrorCode::config_error, "endpoint: required for " + config.provider);
    if (config.credential_env.empty()) {
        throw Error(ErrorCode::config_error, "credential_env: required for " + config.provider);
    }
}

HttpProvider::HttpProvider(ProviderConfig config) : config_(std::move(config)) {}

json HttpProvider::complete(const PromptEnvelope& envelope) {
    const char* credential = std::getenv(config_.credential_env.c_str());
    if (!credential || !*credential) {
        throw Error(ErrorCode::credential_missing, "environment variable " + config_.credential_env + " is not set");
    }
    const auto [base, path] = split_url(config_.endpoint);
    httplib::Client client(base);
    const auto timeout = std::chrono::milliseconds(config_.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    client.set_bearer_token_auth(credential);

    const json body = {{"task", to_string(envelope.task)},
                       {"prompt", envelope.rendered_prompt},
                       {"inputs", envelope.inputs},
                       {"schema", envelope.response_schema}};
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) {
        const auto err = res.error();
        if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
            throw Error(ErrorCode::provider_timeout, config_.provider + " did not answer within " +
                                                         std::to_string(config_.timeout_ms) + " ms");
        }
        throw Error(ErrorCode::provider_error, config_.provider + ": " + httplib::to_string(err));
    }
    if (res->status != 200) {
        throw Error(ErrorCode::provider_error, config_.provider + " returned HTTP " + std::to_string(res->status));
    }
    // Anything unparseable is handed back as-is so the gateway counts it as
    // a schema violation and re-asks.
    auto parsed = json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("output")) return json(res->body);
    return parsed["output"];
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& config) {
    validate(config);
    if (config.provider == "mock") return std::make_unique<MockProvider>();
    return std::make_unique<HttpProvider>(config);
}

}  // namespace genie::llm
