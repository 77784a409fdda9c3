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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixture.hpp"
#include "genie/cli/cli.hpp"
#include "genie/session/session.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace genie;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Copy of the fixture that a test may modify.
void copy_fixture(const test::TempDir& dir) {
    for (const auto& e : fs::directory_iterator(test::fixture_dir())) {
        fs::copy_file(e.path(), fs::path(dir.path()) / e.path().filename());
    }
}

std::vector<std::string> ranked(const json& turn) {
    std::vector<std::string> out;
    for (const auto& r : turn.at("recommendation").at("results")) out.push_back(r.at("recipe"));
    return out;
}

}  // namespace

TEST_CASE("ingest") {
    SUBCASE("the fixture") {
        const auto r = run({"--format", "json", "ingest", "--triples", test::fixture_path("triples.csv"), "--attrs",
                            test::fixture_path("attrs.csv"), "--relations", test::fixture_path("relations.csv")});
        REQUIRE(r.code == cli::kExitOk);
        const auto d = r.doc();
        const auto c = test::oracle::load(test::fixture_dir());
        CHECK(d.at("nodes") == c.kind.size());
        CHECK(d.at("triples") == c.edges.size());
        CHECK(d.at("rejected").empty());
    }
    SUBCASE("empty files") {
        test::TempDir dir;
        write(dir.file("t.csv"), "");
        write(dir.file("a.csv"), "");
        const auto r = run({"--format", "json", "ingest", "--triples", dir.file("t.csv"), "--attrs", dir.file("a.csv")});
        CHECK(r.code == cli::kExitOk);
        CHECK(r.doc().at("nodes") == 0);
    }
    SUBCASE("malformed rows") {
        test::TempDir dir;
        write(dir.file("t.csv"), "subject,relation,object,provenance\nA,contains,B,curated\nA,bogus,B,curated\n");
        write(dir.file("a.csv"), "node_id,attr,value,unit,kind_hint,label\nA,,,,recipe,A\nB,,,,ingredient,B\n");
        const auto lenient = run({"ingest", "--triples", dir.file("t.csv"), "--attrs", dir.file("a.csv")});
        CHECK(lenient.code == cli::kExitOk);
        CHECK(lenient.out.find("rejected: 1") != std::string::npos);
        const auto strict = run({"ingest", "--strict", "--triples", dir.file("t.csv"), "--attrs", dir.file("a.csv")});
        CHECK(strict.code == cli::kExitData);
        CHECK(strict.err.find("line 3") != std::string::npos);
    }
    SUBCASE("missing file") {
        CHECK(run({"ingest", "--triples", "/nonexistent/t.csv", "--attrs", "/nonexistent/a.csv"}).code != cli::kExitOk);
    }
}

TEST_CASE("query") {
    const auto data = test::fixture_dir();
    SUBCASE("vegan under 400 kcal") {
        const auto r = run({"--data", data, "query", "Find me a vegan lunch under 400 kcal"});
        REQUIRE(r.code == cli::kExitOk);
        CHECK(r.out.find("intent: recipe_search") != std::string::npos);
        CHECK(r.out.find("1. ") != std::string::npos);
        CHECK(r.out.find("GrilledTofuWrap") != std::string::npos);
    }
    SUBCASE("gibberish asks for clarification") {
        const auto r = run({"--data", data, "query", "blorp zindle"});
        CHECK(r.code == cli::kExitOk);
        CHECK(r.out.find("clarification:") != std::string::npos);
    }
    SUBCASE("same ranking as a session") {
        const auto r = run({"--data", data, "--format", "json", "query", "I plan to reduce protein and salt intake"});
        REQUIRE(r.code == cli::kExitOk);
        session::Session s(test::fixture_engine());
        s.route_turn("I plan to reduce protein and salt intake");
        std::vector<std::string> want;
        for (const auto& x : s.recommendation()->results) want.push_back(x.recipe);
        CHECK(ranked(r.doc()) == want);
    }
    SUBCASE("dot export") {
        test::TempDir dir;
        const auto r = run({"--data", data, "query", "Find me a vegan lunch", "--dot", dir.file("g.dot"), "--detail", "1"});
        CHECK(r.code == cli::kExitOk);
        const auto dot = read(dir.file("g.dot"));
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(dot.find("->") != std::string::npos);
    }
    SUBCASE("bad config") {
        test::TempDir dir;
        write(dir.file("genie.json"), R"({"server": {"prot": 1}})");
        const auto r = run({"--config", dir.file("genie.json"), "query", "vegan"});
        CHECK(r.code == cli::kExitConfig);
        CHECK(r.err.find("server.prot") != std::string::npos);
    }
    SUBCASE("bad flag") { CHECK(run({"query"}).code == cli::kExitConfig); }
}

TEST_CASE("enrich") {
    test::TempDir dir;
    copy_fixture(dir);
    const auto proposals = dir.file("proposals.json");
    const auto r = run({"--data", dir.path(), "enrich", "--notes", dir.file("notes.txt"), "--out", proposals});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = json::parse(read(proposals));
    bool lemon = false;
    for (const auto& p : doc.at("proposals")) {
        CHECK(p.at("provenance") == "inferred");
        CHECK(p.at("status") == "pending");
        lemon |= p.at("subject") == "Lemon" && p.at("relation") == "neutralizeOdor" && p.at("object") == "Fish";
    }
    CHECK(lemon);

    SUBCASE("an empty acceptance file is a no-op") {
        write(dir.file("empty.json"), "");
        const auto before = read(dir.file("triples.csv"));
        const auto a = run({"--data", dir.path(), "--format", "json", "enrich", "--accept", dir.file("empty.json")});
        CHECK(a.code == cli::kExitOk);
        CHECK(a.doc().at("added") == 0);
        CHECK(read(dir.file("triples.csv")) == before);
    }
    SUBCASE("accepted proposals are exported as inferred") {
        const auto out_dir = dir.file("out");
        const auto a = run({"--data", dir.path(), "--format", "json", "enrich", "--accept", proposals, "--out-dir", out_dir});
        REQUIRE(a.code == cli::kExitOk);
        CHECK(a.doc().at("added") == doc.at("proposals").size());
        CHECK(read(out_dir + "/triples.csv").find("Lemon,neutralizeOdor,Fish,inferred") != std::string::npos);
    }
    SUBCASE("malformed acceptance file") {
        write(dir.file("bad.json"), "[1,2]");
        CHECK(run({"--data", dir.path(), "enrich", "--accept", dir.file("bad.json")}).code == cli::kExitData);
    }
    SUBCASE("neither mode") { CHECK(run({"--data", dir.path(), "enrich"}).code == cli::kExitConfig); }
}

TEST_CASE("export") {
    test::TempDir dir;
    const auto r = run({"--data", test::fixture_dir(), "export", "--out-dir", dir.path()});
    CHECK(r.code == cli::kExitOk);
    const auto again = run({"--format", "json", "ingest", "--triples", dir.file("triples.csv"), "--attrs",
                            dir.file("attrs.csv"), "--relations", test::fixture_path("relations.csv")});
    CHECK(again.doc().at("triples") == test::oracle::load(test::fixture_dir()).edges.size());
}

TEST_CASE("replay") {
    test::TempDir dir;
    std::ostringstream log;
    session::Session s(test::fixture_engine(), {[n = std::int64_t{1000}]() mutable { return n++; }, &log});
    s.route_turn("I plan to reduce protein and salt intake");
    s.stage_action(session::ActionKind::exclude_node, "BlackPepper");
    s.stage_action(session::ActionKind::include_node, "CrushedTomato");
    s.apply();
    write(dir.file("caroline.ndjson"), log.str());

    const auto first = run({"--data", test::fixture_dir(), "--format", "json", "replay", "--session",
                            dir.file("caroline.ndjson")});
    const auto second = run({"--data", test::fixture_dir(), "--format", "json", "replay", "--session",
                             dir.file("caroline.ndjson")});
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.doc().at("query_version") == 2);
    std::vector<std::string> want;
    for (const auto& x : s.recommendation()->results) want.push_back(x.recipe);
    CHECK(ranked(first.doc()) == want);

    const auto human = run({"--data", test::fixture_dir(), "replay", "--session", dir.file("caroline.ndjson")});
    CHECK(human.out.find("excludes Black Pepper") != std::string::npos);

    write(dir.file("empty.ndjson"), "");
    const auto empty = run({"--data", test::fixture_dir(), "replay", "--session", dir.file("empty.ndjson")});
    CHECK(empty.code == cli::kExitOk);
    CHECK(empty.out.find("no recommendation") != std::string::npos);

    write(dir.file("bad.ndjson"), "{}\n");
    CHECK(run({"--data", test::fixture_dir(), "replay", "--session", dir.file("bad.ndjson")}).code == cli::kExitData);

    const auto profiled = run({"--data", test::fixture_dir(), "--format", "json", "query", "what is in these?",
                               "--profile", dir.file("caroline.ndjson")});
    CHECK(profiled.code == cli::kExitOk);
}

TEST_CASE("serve needs a usable config") {
    CHECK(run({"serve"}).code == cli::kExitConfig);
    test::TempDir dir;
    write(dir.file("genie.json"), R"({"llm": {"provider": "provider_q"}})");
    CHECK(run({"--config", dir.file("genie.json"), "serve"}).code == cli::kExitConfig);
}
