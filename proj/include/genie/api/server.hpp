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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>

#include "genie/session/session.hpp"

namespace genie::api {

struct ServerOptions {
    std::filesystem::path log_dir;  // <token>.ndjson per session when set
    int poll_timeout_ms = 25000;
    std::function<std::int64_t()> clock;  // handed to every session
};

// HTTP front end. Routes:
//   POST /sessions
//   POST /sessions/{t}/chat            {message}
//   POST /sessions/{t}/interactions    {kind: include|exclude, node_id}
//   POST /sessions/{t}/apply           {query_version?}
//   POST /sessions/{t}/undo            {action_id}
//   GET  /sessions/{t}/graph?detail=k
//   GET  /sessions/{t}/suggested-queries
//   GET  /sessions/{t}/history
//   GET  /sessions/{t}/profile
//   GET  /sessions/{t}/updates?since=v&timeout_ms=n
//   GET  /sessions/{t}/conflicts
//   POST /sessions/{t}/conflicts/resolve {conflict_id, keep}
//   GET  /sessions/{t}/learned
//   POST /sessions/{t}/learned/confirm   {key}
// Errors are {code, message, details}; every session response carries
// query_version.
class Server {
public:
    Server(std::shared_ptr<const session::Engine> engine, ServerOptions options = {});
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    // Port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    bool run();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// 32 hex digits from the system random source.
std::string new_token();

}  // namespace genie::api
