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

#include <filesystem>
#include <memory>
#include <string>

#include "genie/kg/loader.hpp"
#include "genie/kg/store.hpp"
#include "genie/llm/provider.hpp"
#include "genie/match/config.hpp"
#include "genie/session/session.hpp"
#include "json.hpp"

namespace genie::api {

struct ServerConfig {
    std::string bind = "127.0.0.1";
    int port = 8080;
    int poll_timeout_ms = 25000;  // longest wait on /updates
};

// Paths are resolved against the directory of the config file.
struct CorpusConfig {
    std::filesystem::path triples;
    std::filesystem::path attrs;
    std::filesystem::path relations;  // optional
    std::filesystem::path resources;  // entailments.csv, nutrient_defaults.csv, ...
};

struct AppConfig {
    ServerConfig server;
    CorpusConfig corpus;
    llm::ProviderConfig provider;
    match::MatchConfig matcher;
    session::SessionSettings session;
    std::filesystem::path log_dir;  // per-session NDJSON logs; none when empty
    std::size_t retention = 16;
};

// Keys:
//   server.bind, server.port, server.poll_timeout_ms
//   corpus.triples, corpus.attrs, corpus.relations, corpus.resources
//   llm.provider, llm.providers.<name>.{endpoint, credential_env, timeout_ms, max_retries}
//   matcher.weights.{satisfied, affinity, borderline, tightness}, matcher.top_n,
//   matcher.max_detail, matcher.max_hops, matcher.nodes_per_level,
//   matcher.exclusion_tags, matcher.bands.<nutrient> = [[min, label], ...]
//   session.repetition_threshold, session.default_detail, session.log_dir
//   store.retention
// GENIE_PROVIDER, when set, replaces llm.provider. Unknown keys are
// rejected. Throws Error(config_error) naming the key.
AppConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
AppConfig load_config(const std::filesystem::path& path);

// Config for a corpus directory laid out like data/fixture.
AppConfig directory_config(const std::filesystem::path& dir);

struct Runtime {
    AppConfig config;
    kg::LoadReport report;
    std::shared_ptr<kg::KgStore> store;
    std::shared_ptr<const session::Engine> engine;
};

// Loads the corpus and resources. Corpus problems surface as data errors
// (malformed_row, dangling_reference, unknown_relation); missing files and
// bad resources as Error(config_error).
Runtime load_runtime(const AppConfig& config, bool strict = false);

}  // namespace genie::api
