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

#include <stdexcept>
#include <string>
#include <string_view>

namespace genie {

enum class ErrorCode {
    invalid_argument,
    malformed_row,
    dangling_reference,
    unknown_relation,
    unknown_node,
    version_conflict,
    empty_message,
    no_parsable_content,
    no_candidates,
    unknown_action,
    already_undone,
    no_staged_actions,
    duplicate_stage,
    unknown_conflict,
    unresolved_conflict,
    provider_timeout,
    schema_violation,
    credential_missing,
    provider_error,
    config_error,
    no_recommendation_yet,
    stale_version,
    unknown_session,
};

// Stable snake_case name used on the wire and in CLI output.
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace genie
