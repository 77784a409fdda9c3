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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "genie/api/config.hpp"
#include "genie/api/json.hpp"
#include "genie/api/server.hpp"
#include "genie/cli/cli.hpp"
#include "genie/error.hpp"
#include "genie/kg/loader.hpp"
#include "genie/llm/tasks.hpp"
#include "genie/session/log.hpp"

namespace genie::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Common {
    std::string config;
    std::string data = "data/fixture";
    std::string format = "human";
    bool json_out() const { return format == "json"; }
};

api::AppConfig app_config(const Common& c) {
    return c.config.empty() ? api::directory_config(c.data) : api::load_config(c.config);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path);
    return in;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path.string());
    out << content;
}

json report_json(const kg::LoadReport& r, const kg::GraphSnapshot& s) {
    json rejected = json::array();
    for (const auto& row : r.rejected) {
        rejected.push_back({{"source", row.source}, {"line", row.line}, {"reason", row.reason}});
    }
    return {{"nodes", s.node_count()},
            {"triples", s.triple_count()},
            {"triple_rows", r.triple_rows},
            {"attr_rows", r.attr_rows},
            {"duplicate_triples", r.duplicate_triples},
            {"rejected", rejected}};
}

int ingest(const Common& c, const std::string& triples_path, const std::string& attrs_path,
           const std::string& relations_path, bool strict, std::ostream& out) {
    kg::LoadOptions options;
    options.strict = strict;
    if (!relations_path.empty()) {
        auto rel = open_input(relations_path);
        options.relations = kg::RelationRegistry::from_csv(rel);
    }
    auto t = open_input(triples_path);
    auto a = open_input(attrs_path);
    const auto loaded = kg::load_triples(t, a, options);
    const auto report = report_json(loaded.report, loaded.snapshot);
    if (c.json_out()) {
        out << report.dump(2) << '\n';
        return kExitOk;
    }
    out << "nodes: " << loaded.snapshot.node_count() << "\n"
        << "triples: " << loaded.snapshot.triple_count() << "\n"
        << "triple rows: " << loaded.report.triple_rows << "\n"
        << "attr rows: " << loaded.report.attr_rows << "\n"
        << "duplicate triples: " << loaded.report.duplicate_triples << "\n"
        << "rejected: " << loaded.report.rejected.size() << "\n";
    for (const auto& r : loaded.report.rejected) out << "  " << r.source << ":" << r.line << " " << r.reason << "\n";
    return kExitOk;
}

std::unique_ptr<session::Session> start_session(const api::Runtime& rt, const std::string& profile_log) {
    if (profile_log.empty()) return std::make_unique<session::Session>(rt.engine);
    auto in = open_input(profile_log);
    return session::replay(rt.engine, session::read_log(in));
}

std::string score_text(double score) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.4f", score);
    return buf;
}

void print_results(const match::Recommendation& rec, const kg::GraphSnapshot& snap, std::ostream& out) {
    int rank = 1;
    for (const auto& r : rec.results) {
        out << rank++ << ". " << snap.node(r.recipe).label << " (" << r.recipe << ") " << match::to_string(r.status)
            << " " << score_text(r.score) << "\n";
    }
}

int query_cmd(const Common& c, const std::string& text, const std::string& profile_log, const std::string& dot_path,
              int detail, std::ostream& out) {
    const auto rt = api::load_runtime(app_config(c));
    auto s = start_session(rt, profile_log);
    const auto turn = s->route_turn(text);
    const auto& snap = rt.engine->snapshot();
    std::optional<kg::SubgraphView> view;
    if (s->recommendation() && (detail > 0 || !dot_path.empty())) {
        view = detail > 0 ? s->graph(detail) : s->recommendation()->subgraph;
    }
    if (!dot_path.empty() && view) write_file(dot_path, to_dot(*view, snap));
    if (c.json_out()) {
        auto j = api::turn_json(turn, snap);
        if (view) j["subgraph"] = api::subgraph_json(*view, snap);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "intent: " << query::to_string(turn.intent.category) << "\n";
    if (!turn.recommendation) {
        out << "clarification: " << turn.reply << "\n";
        return kExitOk;
    }
    print_results(*turn.recommendation, snap, out);
    out << "\n" << turn.reply << "\n";
    return kExitOk;
}

int replay_cmd(const Common& c, const std::string& log_path, std::ostream& out) {
    const auto rt = api::load_runtime(app_config(c));
    auto in = open_input(log_path);
    const auto s = session::replay(rt.engine, session::read_log(in));
    const auto& snap = rt.engine->snapshot();
    const auto profile = s->profile();
    if (c.json_out()) {
        json j = {{"profile", session::to_json(profile)}, {"query_version", s->query_version()}};
        j["recommendation"] = s->recommendation() ? api::recommendation_json(*s->recommendation(), snap) : json();
        j["summary"] = s->summary();
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "actions: " << profile.history.size() << "\n";
    out << "constraints:\n";
    for (const auto& k : profile.active_constraints.constraints) {
        out << "  [" << query::to_string(k.status) << "] " << query::describe(k, &snap) << "\n";
    }
    if (!s->recommendation()) {
        out << "no recommendation\n";
        return kExitOk;
    }
    out << "recommendation (query version " << s->query_version() << "):\n";
    print_results(*s->recommendation(), snap, out);
    out << "\n" << s->summary() << "\n";
    return kExitOk;
}

json edge_json(const kg::RelationEdge& e) {
    return {{"subject", e.subject},
            {"relation", e.relation},
            {"object", e.object},
            {"provenance", kg::to_string(e.provenance)},
            {"status", "pending"}};
}

int enrich_propose(const Common& c, const std::string& notes_path, const std::string& out_path, std::ostream& out) {
    const auto rt = api::load_runtime(app_config(c));
    auto in = open_input(notes_path);
    std::stringstream text;
    text << in.rdbuf();
    const auto& snap = rt.engine->snapshot();
    const auto edges = llm::extract_relations(
        rt.engine->gateway(), text.str(),
        [&](const std::string& s) { return resolve_surface(rt.engine->lexicon(), snap, s); }, snap.relations());
    json proposals = json::array();
    for (const auto& e : edges) {
        if (!snap.has_triple(e.triple())) proposals.push_back(edge_json(e));
    }
    const json doc = {{"snapshot_version", snap.version()}, {"proposals", proposals}};
    if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
    if (c.json_out() || out_path.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        out << proposals.size() << " proposals written to " << out_path << "\n";
        for (const auto& p : proposals) {
            out << "  (" << p["subject"].get<std::string>() << ", " << p["relation"].get<std::string>() << ", "
                << p["object"].get<std::string>() << ") pending\n";
        }
    }
    return kExitOk;
}

void export_corpus(const kg::GraphSnapshot& snap, const fs::path& dir) {
    fs::create_directories(dir);
    std::ostringstream t, a;
    kg::export_triples(snap, t);
    kg::export_attrs(snap, a);
    write_file(dir / "triples.csv", t.str());
    write_file(dir / "attrs.csv", a.str());
}

int enrich_accept(const Common& c, const std::string& proposal_path, const std::string& out_dir, std::ostream& out) {
    const auto rt = api::load_runtime(app_config(c));
    auto in = open_input(proposal_path);
    std::stringstream raw;
    raw << in.rdbuf();
    kg::UpsertBatch batch;
    if (raw.str().find_first_not_of(" \t\r\n") != std::string::npos) {
        const auto doc = json::parse(raw.str(), nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("proposals") || !doc["proposals"].is_array()) {
            throw Error(ErrorCode::malformed_row, proposal_path + ": expected {\"proposals\": [...]}");
        }
        for (const auto& p : doc["proposals"]) {
            if (p.value("status", "pending") == "rejected") continue;
            try {
                batch.edges.push_back({p.at("subject").get<std::string>(), p.at("relation").get<std::string>(),
                                       p.at("object").get<std::string>(), kg::Provenance::inferred, 0});
            } catch (const json::exception&) {
                throw Error(ErrorCode::malformed_row, proposal_path + ": proposal needs subject, relation, object");
            }
        }
    }
    const auto before = rt.store->version();
    const auto after = batch.edges.empty() ? rt.store->current() : rt.store->upsert(batch);
    const auto added = after->triple_count() - rt.store->at(before)->triple_count();
    if (after->version() != before) {
        const fs::path dir = out_dir.empty() ? rt.config.corpus.triples.parent_path() : fs::path(out_dir);
        export_corpus(*after, dir);
    }
    if (c.json_out()) {
        out << json{{"added", added}, {"snapshot_version", after->version()}}.dump(2) << '\n';
    } else {
        out << added << " triples added, snapshot version " << after->version() << "\n";
    }
    return kExitOk;
}

int export_cmd(const Common& c, const std::string& out_dir, std::ostream& out) {
    const auto rt = api::load_runtime(app_config(c));
    const auto& snap = rt.engine->snapshot();
    if (out_dir.empty()) {
        kg::export_triples(snap, out);
        return kExitOk;
    }
    export_corpus(snap, out_dir);
    out << "wrote " << snap.triple_count() << " triples and " << snap.node_count() << " nodes to " << out_dir << "\n";
    return kExitOk;
}

int serve_cmd(const Common& c, std::ostream& out) {
    const auto cfg = app_config(c);
    const auto rt = api::load_runtime(cfg);
    if (!cfg.log_dir.empty()) fs::create_directories(cfg.log_dir);
    api::Server server(rt.engine, {cfg.log_dir, cfg.server.poll_timeout_ms, {}});
    const int port = server.bind(cfg.server.bind, cfg.server.port);
    if (port < 0) throw Error(ErrorCode::config_error, "server.port: cannot bind " + cfg.server.bind);
    out << "listening on " << cfg.server.bind << ":" << port << std::endl;
    return server.run() ? kExitOk : kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"genie: recipe knowledge graph engine"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--config", common.config, "JSON config file");
    app.add_option("--data", common.data, "corpus directory used when no config is given");
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"human", "json"}));

    std::string triples, attrs, relations;
    bool strict = false;
    auto* ingest_cmd = app.add_subcommand("ingest", "load and validate a corpus");
    ingest_cmd->add_option("--triples", triples)->required();
    ingest_cmd->add_option("--attrs", attrs)->required();
    ingest_cmd->add_option("--relations", relations);
    ingest_cmd->add_flag("--strict", strict);

    std::string text, profile_log, dot_path;
    int detail = 0;
    auto* query = app.add_subcommand("query", "run one message and print the ranking");
    query->add_option("text", text)->required();
    query->add_option("--profile", profile_log, "session log replayed first");
    query->add_option("--dot", dot_path, "write the subgraph as DOT");
    query->add_option("--detail", detail, "detail level of the exported subgraph");

    std::string notes, accept, proposals_out, out_dir;
    auto* enrich = app.add_subcommand("enrich", "propose or accept new relations");
    auto* notes_opt = enrich->add_option("--notes", notes, "free text to mine");
    auto* accept_opt = enrich->add_option("--accept", accept, "reviewed proposal file");
    notes_opt->excludes(accept_opt);
    enrich->add_option("--out", proposals_out, "proposal file to write");
    enrich->add_option("--out-dir", out_dir, "where accepted corpus files go");

    std::string export_dir;
    auto* exp = app.add_subcommand("export", "write canonical triples.csv and attrs.csv");
    exp->add_option("--out-dir", export_dir);

    std::string session_log;
    auto* replay = app.add_subcommand("replay", "replay a session log");
    replay->add_option("--session", session_log)->required();

    auto* serve = app.add_subcommand("serve", "run the HTTP service");
    serve->callback([&] {
        if (common.config.empty()) throw CLI::RequiredError("--config");
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*ingest_cmd) return ingest(common, triples, attrs, relations, strict, out);
        if (*query) return query_cmd(common, text, profile_log, dot_path, detail, out);
        if (*enrich) {
            if (!notes.empty()) return enrich_propose(common, notes, proposals_out, out);
            if (!accept.empty()) return enrich_accept(common, accept, out_dir, out);
            err << "enrich: give --notes or --accept\n";
            return kExitConfig;
        }
        if (*exp) return export_cmd(common, export_dir, out);
        if (*replay) return replay_cmd(common, session_log, out);
        if (*serve) return serve_cmd(common, out);
    } catch (const Error& e) {
        const auto code = std::string(code_name(e.code()));
        if (common.json_out()) {
            out << api::error_json(code, e.what()).dump(2) << '\n';
        } else {
            err << "error: " << code << ": " << e.what() << "\n";
        }
        return e.code() == ErrorCode::config_error ? kExitConfig : kExitData;
    }
    return kExitOk;
}

}  // namespace genie::cli
