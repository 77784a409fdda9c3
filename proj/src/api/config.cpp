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


#include "genie/api/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "genie/error.hpp"
#include "genie/llm/gateway.hpp"
#include "genie/query/resources.hpp"

namespace genie::api {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw Error(ErrorCode::config_error, key + ": " + what);
}

void only_keys(const json& j, const std::string& prefix, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(prefix, "expected an object");
    for (const auto& [k, v] : j.items()) {
        if (!allowed.contains(k)) fail(prefix.empty() ? k : prefix + "." + k, "unknown key");
    }
}

template <typename T>
T get(const json& j, const std::string& name, const std::string& key, T fallback) {
    if (!j.contains(name)) return fallback;
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        fail(key, "wrong type");
    }
}

int get_int(const json& j, const std::string& name, const std::string& key, int fallback) {
    if (!j.contains(name)) return fallback;
    if (!j.at(name).is_number_integer()) fail(key, "expected an integer");
    return j.at(name).get<int>();
}

double get_number(const json& j, const std::string& name, const std::string& key, double fallback) {
    if (!j.contains(name)) return fallback;
    if (!j.at(name).is_number()) fail(key, "expected a number");
    return j.at(name).get<double>();
}

fs::path get_path(const json& j, const std::string& name, const std::string& key, const fs::path& base) {
    const auto s = get<std::string>(j, name, key, "");
    if (s.empty()) return {};
    const fs::path p(s);
    return p.is_absolute() ? p : base / p;
}

void parse_matcher(const json& m, match::MatchConfig& cfg) {
    only_keys(m, "matcher", {"weights", "top_n", "max_detail", "max_hops", "nodes_per_level", "exclusion_tags", "bands"});
    if (m.contains("weights")) {
        const auto& w = m.at("weights");
        only_keys(w, "matcher.weights", {"satisfied", "affinity", "borderline", "tightness"});
        cfg.weights.satisfied = get_number(w, "satisfied", "matcher.weights.satisfied", cfg.weights.satisfied);
        cfg.weights.affinity = get_number(w, "affinity", "matcher.weights.affinity", cfg.weights.affinity);
        cfg.weights.borderline = get_number(w, "borderline", "matcher.weights.borderline", cfg.weights.borderline);
        cfg.weights.tightness = get_number(w, "tightness", "matcher.weights.tightness", cfg.weights.tightness);
    }
    cfg.top_n = get_int(m, "top_n", "matcher.top_n", cfg.top_n);
    cfg.max_detail = get_int(m, "max_detail", "matcher.max_detail", cfg.max_detail);
    cfg.max_hops = get_int(m, "max_hops", "matcher.max_hops", cfg.max_hops);
    cfg.nodes_per_level = get_int(m, "nodes_per_level", "matcher.nodes_per_level", cfg.nodes_per_level);
    cfg.exclusion_tags = get(m, "exclusion_tags", "matcher.exclusion_tags", cfg.exclusion_tags);
    if (m.contains("bands")) {
        const auto& b = m.at("bands");
        if (!b.is_object()) fail("matcher.bands", "expected an object");
        cfg.bands.clear();
        for (const auto& [nutrient, rows] : b.items()) {
            const auto key = "matcher.bands." + nutrient;
            if (!rows.is_array()) fail(key, "expected a list of [min, label]");
            auto& bands = cfg.bands[nutrient];
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_string()) {
                    fail(key, "expected a list of [min, label]");
                }
                bands.push_back({row[0].get<double>(), row[1].get<std::string>()});
            }
        }
    }
    match::validate(cfg);
}

void parse_llm(const json& l, llm::ProviderConfig& cfg) {
    only_keys(l, "llm", {"provider", "providers"});
    std::string name = get<std::string>(l, "provider", "llm.provider", "mock");
    if (const char* env = std::getenv("GENIE_PROVIDER"); env && *env) name = env;
    cfg = llm::ProviderConfig{};
    cfg.provider = name;
    if (name == "mock") return;
    const auto key = "llm.providers." + name;
    if (!l.contains("providers") || !l.at("providers").contains(name)) fail(key, "no settings for the selected provider");
    const auto& p = l.at("providers").at(name);
    only_keys(p, key, {"endpoint", "credential_env", "timeout_ms", "max_retries"});
    cfg.endpoint = get<std::string>(p, "endpoint", key + ".endpoint", "");
    cfg.credential_env = get<std::string>(p, "credential_env", key + ".credential_env", "");
    cfg.timeout_ms = get_int(p, "timeout_ms", key + ".timeout_ms", cfg.timeout_ms);
    cfg.max_retries = get_int(p, "max_retries", key + ".max_retries", cfg.max_retries);
    try {
        llm::validate(cfg);
    } catch (const Error& e) {
        fail(key, e.what());
    }
}

}  // namespace

AppConfig parse_config(const json& j, const fs::path& base_dir) {
    only_keys(j, "", {"server", "corpus", "llm", "matcher", "session", "store"});
    AppConfig cfg;
    if (j.contains("server")) {
        const auto& s = j.at("server");
        only_keys(s, "server", {"bind", "port", "poll_timeout_ms"});
        cfg.server.bind = get<std::string>(s, "bind", "server.bind", cfg.server.bind);
        cfg.server.port = get_int(s, "port", "server.port", cfg.server.port);
        cfg.server.poll_timeout_ms = get_int(s, "poll_timeout_ms", "server.poll_timeout_ms", cfg.server.poll_timeout_ms);
        if (cfg.server.port < 0 || cfg.server.port > 65535) fail("server.port", "out of range");
        if (cfg.server.poll_timeout_ms < 0) fail("server.poll_timeout_ms", "must not be negative");
    }
    if (!j.contains("corpus")) fail("corpus", "missing");
    const auto& c = j.at("corpus");
    only_keys(c, "corpus", {"triples", "attrs", "relations", "resources"});
    cfg.corpus.triples = get_path(c, "triples", "corpus.triples", base_dir);
    cfg.corpus.attrs = get_path(c, "attrs", "corpus.attrs", base_dir);
    cfg.corpus.relations = get_path(c, "relations", "corpus.relations", base_dir);
    cfg.corpus.resources = get_path(c, "resources", "corpus.resources", base_dir);
    if (cfg.corpus.triples.empty()) fail("corpus.triples", "missing");
    if (cfg.corpus.attrs.empty()) fail("corpus.attrs", "missing");
    if (cfg.corpus.resources.empty()) fail("corpus.resources", "missing");
    parse_llm(j.value("llm", json::object()), cfg.provider);
    if (j.contains("matcher")) parse_matcher(j.at("matcher"), cfg.matcher);
    if (j.contains("session")) {
        const auto& s = j.at("session");
        only_keys(s, "session", {"repetition_threshold", "default_detail", "log_dir"});
        cfg.session.repetition_threshold =
            get_int(s, "repetition_threshold", "session.repetition_threshold", cfg.session.repetition_threshold);
        cfg.session.default_detail = get_int(s, "default_detail", "session.default_detail", cfg.session.default_detail);
        cfg.log_dir = get_path(s, "log_dir", "session.log_dir", base_dir);
        if (cfg.session.repetition_threshold < 1) fail("session.repetition_threshold", "must be at least 1");
        if (cfg.session.default_detail < 1) fail("session.default_detail", "must be at least 1");
    }
    if (j.contains("store")) {
        const auto& s = j.at("store");
        only_keys(s, "store", {"retention"});
        const int r = get_int(s, "retention", "store.retention", static_cast<int>(cfg.retention));
        if (r < 1) fail("store.retention", "must be at least 1");
        cfg.retention = static_cast<std::size_t>(r);
    }
    return cfg;
}

AppConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config_error, "config: cannot open " + path.string());
    const auto j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::config_error, "config: " + path.string() + " is not valid JSON");
    return parse_config(j, path.parent_path());
}

AppConfig directory_config(const fs::path& dir) {
    json j = {{"corpus", {{"triples", "triples.csv"}, {"attrs", "attrs.csv"}, {"resources", "."}}}};
    if (fs::exists(dir / "relations.csv")) j["corpus"]["relations"] = "relations.csv";
    return parse_config(j, dir);
}

Runtime load_runtime(const AppConfig& config, bool strict) {
    auto open = [](const fs::path& p, const char* key) {
        std::ifstream in(p);
        if (!in) throw Error(ErrorCode::config_error, std::string(key) + ": cannot open " + p.string());
        return in;
    };
    kg::LoadOptions options;
    options.strict = strict;
    if (!config.corpus.relations.empty()) {
        auto rel = open(config.corpus.relations, "corpus.relations");
        options.relations = kg::RelationRegistry::from_csv(rel);
    }
    auto triples = open(config.corpus.triples, "corpus.triples");
    auto attrs = open(config.corpus.attrs, "corpus.attrs");
    auto loaded = kg::load_triples(triples, attrs, options);

    Runtime rt;
    rt.config = config;
    rt.report = std::move(loaded.report);
    kg::StoreOptions store_options;
    store_options.retention = config.retention;
    rt.store = std::make_shared<kg::KgStore>(std::move(loaded.snapshot), store_options);
    auto resources = query::ParserResources::load(config.corpus.resources);
    rt.engine = std::make_shared<const session::Engine>(rt.store->current(), std::move(resources), config.matcher,
                                                        llm::Gateway(config.provider), config.session);
    return rt;
}

}  // namespace genie::api
