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


#include "genie/session/log.hpp"

#include <string>

#include "genie/error.hpp"

namespace genie::session {

std::vector<InteractionAction> read_log(std::istream& in) {
    std::vector<InteractionAction> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorCode::malformed_row, "line " + std::to_string(n) + ": not JSON");
        try {
            out.push_back(action_from_json(j));
        } catch (const Error& e) {
            throw Error(ErrorCode::malformed_row, "line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

std::unique_ptr<Session> replay(std::shared_ptr<const Engine> engine, const std::vector<InteractionAction>& log,
                                std::ostream* sink) {
    auto now = std::make_shared<std::int64_t>(0);
    SessionOptions options;
    options.clock = [now] { return *now; };
    options.log = sink;
    auto session = std::make_unique<Session>(std::move(engine), options);
    for (const auto& a : log) {
        *now = a.timestamp;
        switch (a.kind) {
            case ActionKind::text_query: session->route_turn(a.target); break;
            case ActionKind::include_node:
            case ActionKind::exclude_node: session->stage_action(a.kind, a.target); break;
            case ActionKind::apply: session->apply(); break;
            case ActionKind::undo: session->undo(std::stoull(a.target)); break;
            case ActionKind::clarification_answer: {
                const auto j = nlohmann::json::parse(a.target, nullptr, false);
                if (j.is_discarded() || !j.is_object()) {
                    throw Error(ErrorCode::malformed_row, "action " + std::to_string(a.id) + ": bad answer");
                }
                if (j.value("type", "") == "resolve") {
                    session->resolve_conflict(j.value("conflict", ""), j.value("keep", ""));
                } else {
                    session->confirm_learned(j.value("key", ""));
                }
                break;
            }
        }
    }
    return session;
}

}  // namespace genie::session
