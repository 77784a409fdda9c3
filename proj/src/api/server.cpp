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


#include "genie/api/server.hpp"

#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>

#include "genie/api/json.hpp"
#include "genie/error.hpp"
#include "httplib.h"

namespace genie::api {

using nlohmann::json;

std::string new_token() {
    static std::mutex mu;
    static std::random_device rd;
    std::lock_guard lock(mu);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < 4; ++i) {
        std::uint32_t v = rd();
        for (int k = 0; k < 8; ++k) {
            out.push_back(hex[v & 0xf]);
            v >>= 4;
        }
    }
    return out;
}

namespace {

struct Entry {
    std::mutex mu;
    std::condition_variable changed;
    std::unique_ptr<std::ofstream> log;
    std::unique_ptr<session::Session> session;
    std::int64_t created_at = 0;
};

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_header("Content-Language", "en");
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const json& details = json::object()) {
    send(res, status, error_json(code, message, details));
}

json body_of(const httplib::Request& req) {
    const auto j = json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::invalid_argument, "body must be a JSON object");
    return j;
}

template <typename T>
T field(const json& body, const char* name) {
    if (!body.contains(name)) throw Error(ErrorCode::invalid_argument, std::string("missing field '") + name + "'");
    try {
        return body.at(name).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::invalid_argument, std::string("field '") + name + "' has the wrong type");
    }
}

int int_param(const httplib::Request& req, const char* name, int fallback) {
    if (!req.has_param(name)) return fallback;
    const auto s = req.get_param_value(name);
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, std::string("query parameter '") + name + "' must be an integer");
    }
}

}  // namespace

struct Server::Impl {
    std::shared_ptr<const session::Engine> engine;
    ServerOptions options;
    httplib::Server http;
    std::shared_mutex sessions_mu;
    std::map<std::string, std::shared_ptr<Entry>> sessions;

    std::shared_ptr<Entry> lookup(const httplib::Request& req) {
        const auto token = req.path_params.at("token");
        std::shared_lock lock(sessions_mu);
        const auto it = sessions.find(token);
        if (it == sessions.end()) throw Error(ErrorCode::unknown_session, "unknown session token");
        return it->second;
    }

    using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

    Handler guarded(Handler fn) {
        return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
            try {
                fn(req, res);
            } catch (const Error& e) {
                send_error(res, http_status(e.code()), std::string(code_name(e.code())), e.what());
            } catch (const std::exception& e) {
                send_error(res, 500, "internal", e.what());
            }
        };
    }

    // Runs `fn` on the session under its lock and wakes long-pollers.
    using SessionFn = std::function<void(Entry&, const httplib::Request&, httplib::Response&)>;
    Handler scoped(SessionFn fn, bool mutates) {
        return guarded([this, fn = std::move(fn), mutates](const httplib::Request& req, httplib::Response& res) {
            auto entry = lookup(req);
            std::unique_lock lock(entry->mu);
            fn(*entry, req, res);
            if (mutates) entry->changed.notify_all();
        });
    }

    const kg::GraphSnapshot& snap(const Entry& e) const { return e.session->engine().snapshot(); }

    void create(const httplib::Request&, httplib::Response& res) {
        auto entry = std::make_shared<Entry>();
        std::string token;
        {
            std::unique_lock lock(sessions_mu);
            do {
                token = new_token();
            } while (sessions.contains(token));
            session::SessionOptions so;
            so.clock = options.clock;
            if (!options.log_dir.empty()) {
                entry->log = std::make_unique<std::ofstream>(options.log_dir / (token + ".ndjson"));
                so.log = entry->log.get();
            }
            entry->session = std::make_unique<session::Session>(engine, so);
            entry->created_at = options.clock ? options.clock()
                                              : std::chrono::duration_cast<std::chrono::milliseconds>(
                                                    std::chrono::system_clock::now().time_since_epoch())
                                                    .count();
            sessions.emplace(token, entry);
        }
        send(res, 201,
             {{"token", token},
              {"created_at", entry->created_at},
              {"snapshot_version", engine->snapshot().version()},
              {"query_version", 0}});
    }

    void routes() {
        http.Post("/sessions", guarded([this](const auto& req, auto& res) { create(req, res); }));

        http.Post("/sessions/:token/chat", scoped(
                                               [this](Entry& e, const auto& req, auto& res) {
                                                   const auto body = body_of(req);
                                                   const auto message = field<std::string>(body, "message");
                                                   const auto turn = e.session->route_turn(message);
                                                   send(res, 200, turn_json(turn, snap(e)));
                                               },
                                               true));

        http.Post("/sessions/:token/interactions",
                  scoped(
                      [](Entry& e, const auto& req, auto& res) {
                          const auto body = body_of(req);
                          const auto kind = field<std::string>(body, "kind");
                          const auto node = field<std::string>(body, "node_id");
                          session::ActionKind k;
                          if (kind == "include") {
                              k = session::ActionKind::include_node;
                          } else if (kind == "exclude") {
                              k = session::ActionKind::exclude_node;
                          } else {
                              throw Error(ErrorCode::invalid_argument, "kind must be include or exclude");
                          }
                          const auto staged = e.session->stage_action(k, node);
                          if (staged.duplicate) {
                              send_error(res, 409, "duplicate_stage", "already staged",
                                         {{"action", session::to_json(staged.action)},
                                          {"query_version", e.session->query_version()}});
                              return;
                          }
                          send(res, 201,
                               {{"action", session::to_json(staged.action)},
                                {"history", history_json(e.session->history())},
                                {"query_version", e.session->query_version()}});
                      },
                      true));

        http.Post("/sessions/:token/apply", scoped(
                                                [this](Entry& e, const auto& req, auto& res) {
                                                    std::optional<std::uint64_t> expected;
                                                    if (!req.body.empty()) {
                                                        const auto body = body_of(req);
                                                        if (body.contains("query_version")) {
                                                            expected = field<std::uint64_t>(body, "query_version");
                                                        }
                                                    }
                                                    send(res, 200, outcome_json(e.session->apply(expected), snap(e)));
                                                },
                                                true));

        http.Post("/sessions/:token/undo", scoped(
                                               [this](Entry& e, const auto& req, auto& res) {
                                                   const auto body = body_of(req);
                                                   const auto id = field<std::uint64_t>(body, "action_id");
                                                   send(res, 200, outcome_json(e.session->undo(id), snap(e)));
                                               },
                                               true));

        http.Get("/sessions/:token/graph", scoped(
                                               [this](Entry& e, const auto& req, auto& res) {
                                                   const int asked = int_param(req, "detail", 1);
                                                   const int k = e.session->engine().matcher().clamp_detail(asked);
                                                   auto body = subgraph_json(e.session->graph(k), snap(e));
                                                   body["query_version"] = e.session->query_version();
                                                   send(res, 200, body);
                                                   if (k != asked) {
                                                       res.set_header("X-Genie-Warning",
                                                                      "detail clamped to " + std::to_string(k));
                                                   }
                                               },
                                               false));

        http.Get("/sessions/:token/suggested-queries",
                 scoped(
                     [](Entry& e, const auto&, auto& res) {
                         send(res, 200,
                              {{"suggestions", e.session->suggested_queries()},
                               {"query_version", e.session->query_version()}});
                     },
                     false));

        http.Get("/sessions/:token/history", scoped(
                                                 [](Entry& e, const auto&, auto& res) {
                                                     send(res, 200,
                                                          {{"actions", history_json(e.session->history())},
                                                           {"query_version", e.session->query_version()}});
                                                 },
                                                 false));

        http.Get("/sessions/:token/profile", scoped(
                                                 [](Entry& e, const auto&, auto& res) {
                                                     send(res, 200,
                                                          {{"profile", session::to_json(e.session->profile())},
                                                           {"query_version", e.session->query_version()}});
                                                 },
                                                 false));

        http.Get("/sessions/:token/conflicts", scoped(
                                                   [](Entry& e, const auto&, auto& res) {
                                                       send(res, 200,
                                                            {{"conflicts", e.session->conflicts()},
                                                             {"query_version", e.session->query_version()}});
                                                   },
                                                   false));

        http.Post("/sessions/:token/conflicts/resolve",
                  scoped(
                      [this](Entry& e, const auto& req, auto& res) {
                          const auto body = body_of(req);
                          const auto out = e.session->resolve_conflict(field<std::string>(body, "conflict_id"),
                                                                       field<std::string>(body, "keep"));
                          send(res, 200, outcome_json(out, snap(e)));
                      },
                      true));

        http.Get("/sessions/:token/learned", scoped(
                                                 [](Entry& e, const auto&, auto& res) {
                                                     const auto p = e.session->profile();
                                                     send(res, 200,
                                                          {{"proposals", p.proposals},
                                                           {"learned", p.learned},
                                                           {"rejection_counters", p.rejection_counters},
                                                           {"query_version", e.session->query_version()}});
                                                 },
                                                 false));

        http.Post("/sessions/:token/learned/confirm",
                  scoped(
                      [this](Entry& e, const auto& req, auto& res) {
                          const auto body = body_of(req);
                          send(res, 200,
                               outcome_json(e.session->confirm_learned(field<std::string>(body, "key")), snap(e)));
                      },
                      true));

        http.Get("/sessions/:token/updates", guarded([this](const auto& req, auto& res) {
                     auto entry = lookup(req);
                     const auto since = static_cast<std::uint64_t>(int_param(req, "since", 0));
                     const int wait = std::clamp(int_param(req, "timeout_ms", options.poll_timeout_ms), 0,
                                                 options.poll_timeout_ms);
                     std::unique_lock lock(entry->mu);
                     auto& s = *entry->session;
                     const bool changed = entry->changed.wait_for(lock, std::chrono::milliseconds(wait),
                                                                  [&] { return s.query_version() > since; });
                     json body = {{"changed", changed}, {"query_version", s.query_version()}};
                     if (changed && s.recommendation()) {
                         body["recommendation"] = recommendation_json(*s.recommendation(), snap(*entry));
                         body["subgraph"] = subgraph_json(s.recommendation()->subgraph, snap(*entry));
                         body["summary"] = s.summary();
                     }
                     send(res, 200, body);
                 }));
    }
};

Server::Server(std::shared_ptr<const session::Engine> engine, ServerOptions options) : impl_(std::make_unique<Impl>()) {
    if (!engine) throw Error(ErrorCode::invalid_argument, "server needs an engine");
    impl_->engine = std::move(engine);
    impl_->options = std::move(options);
    impl_->routes();
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
    if (port == 0) return impl_->http.bind_to_any_port(host);
    return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::run() { return impl_->http.listen_after_bind(); }

void Server::stop() {
    if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace genie::api
