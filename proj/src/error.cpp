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


#include "genie/error.hpp"

namespace genie {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::malformed_row: return "malformed_row";
        case ErrorCode::dangling_reference: return "dangling_reference";
        case ErrorCode::unknown_relation: return "unknown_relation";
        case ErrorCode::unknown_node: return "unknown_node";
        case ErrorCode::version_conflict: return "version_conflict";
        case ErrorCode::empty_message: return "empty_message";
        case ErrorCode::no_parsable_content: return "no_parsable_content";
        case ErrorCode::no_candidates: return "no_candidates";
        case ErrorCode::unknown_action: return "unknown_action";
        case ErrorCode::already_undone: return "already_undone";
        case ErrorCode::no_staged_actions: return "no_staged_actions";
        case ErrorCode::duplicate_stage: return "duplicate_stage";
        case ErrorCode::unknown_conflict: return "unknown_conflict";
        case ErrorCode::unresolved_conflict: return "unresolved_conflict";
        case ErrorCode::provider_timeout: return "provider_timeout";
        case ErrorCode::schema_violation: return "schema_violation";
        case ErrorCode::credential_missing: return "credential_missing";
        case ErrorCode::provider_error: return "provider_error";
        case ErrorCode::config_error: return "config_error";
        case ErrorCode::no_recommendation_yet: return "no_recommendation_yet";
        case ErrorCode::stale_version: return "stale_version";
        case ErrorCode::unknown_session: return "unknown_session";
    }
    return "unknown";
}

}  // namespace genie
