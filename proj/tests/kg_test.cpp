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
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixture.hpp"
#include "genie/error.hpp"
#include "genie/kg/closure.hpp"
#include "genie/kg/loader.hpp"
#include "genie/kg/store.hpp"
#include "genie/kg/subgraph.hpp"
#include "oracle.hpp"

using namespace genie;
using genie::test::fixture_path;
using genie::test::fixture_snapshot;

namespace {

kg::LoadResult load_text(const std::string& triples, const std::string& attrs, bool strict = false) {
    std::istringstream t(triples), a(attrs);
    kg::LoadOptions o;
    o.strict = strict;
    return kg::load_triples(t, a, o);
}

std::set<std::string> lines_of(const std::string& path) {
    std::ifstream in(path);
    std::set<std::string> out;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (!line.empty()) out.insert(line);
    }
    return out;
}

std::set<std::string> lines_of_text(const std::string& text) {
    std::istringstream in(text);
    std::set<std::string> out;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (!line.empty()) out.insert(line);
    }
    return out;
}

// Attribute rows with milligrams rewritten to grams, as the store keeps them.
std::set<std::string> in_grams(const std::set<std::string>& rows) {
    std::set<std::string> out;
    for (const auto& row : rows) {
        std::vector<std::string> f;
        std::stringstream ss(row);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        while (f.size() < 6) f.emplace_back();
        if (f[3] == "mg") {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", std::stod(f[2]) / 1000.0);
            f[2] = buf;
            f[3] = "g";
        }
        out.insert(f[0] + "," + f[1] + "," + f[2] + "," + f[3] + "," + f[4] + "," + f[5]);
    }
    return out;
}

}  // namespace

TEST_CASE("a recipe row and its calories load into a recipe node") {
    const auto r = load_text("subject,relation,object,provenance\nGrilledTofuWrap,contains,Tofu,curated\n",
                             "node_id,attr,value,unit,kind_hint,label\n"
                             "GrilledTofuWrap,,,,recipe,Grilled Tofu Wrap\n"
                             "GrilledTofuWrap,calories,320,kcal,,\n");
    const auto& n = r.snapshot.node("GrilledTofuWrap");
    CHECK(n.kind == kg::NodeKind::recipe);
    CHECK(n.numeric_attrs.at("calories").value == 320);
    CHECK(n.numeric_attrs.at("calories").unit == kg::Unit::kcal);
    CHECK(r.snapshot.node("Tofu").kind == kg::NodeKind::ingredient);
}

TEST_CASE("empty streams give an empty version 1 snapshot") {
    const auto r = load_text("", "");
    CHECK(r.snapshot.node_count() == 0);
    CHECK(r.snapshot.triple_count() == 0);
    CHECK(r.snapshot.version() == 1);
}

TEST_CASE("fixture counts match a line count over the CSVs") {
    const auto triples = lines_of(fixture_path("triples.csv"));
    std::set<std::string> ids;
    std::set<std::tuple<std::string, std::string, std::string>> unique;
    for (const auto& line : triples) {
        std::stringstream ss(line);
        std::string s, r, o;
        std::getline(ss, s, ',');
        std::getline(ss, r, ',');
        std::getline(ss, o, ',');
        unique.insert({s, r, o});
        ids.insert(s);
        ids.insert(o);
    }
    for (const auto& line : lines_of(fixture_path("attrs.csv"))) ids.insert(line.substr(0, line.find(',')));

    const auto snap = fixture_snapshot();
    CHECK(snap->triple_count() == unique.size());
    CHECK(snap->node_count() == ids.size());
    CHECK(snap->ids_of_kind(kg::NodeKind::recipe).size() >= 20);
    CHECK(snap->ids_of_kind(kg::NodeKind::ingredient).size() >= 60);
}

TEST_CASE("mg quantities are stored in grams") {
    const auto& n = fixture_snapshot()->node("Shakshuka");
    CHECK(n.numeric_attrs.at("sodium").unit == kg::Unit::g);
    CHECK(n.numeric_attrs.at("sodium").value == doctest::Approx(0.45));
}

TEST_CASE("lenient load skips and reports bad rows; strict load stops at the first") {
    const std::string triples =
        "subject,relation,object,provenance\nA,contains,B,curated\nA,flavours,B,curated\nA,contains\n";
    const std::string attrs = "node_id,attr,value,unit,kind_hint,label\nA,,,,recipe,A\nB,,,,ingredient,B\n"
                              "A,calories,-5,kcal,,\n";
    const auto lenient = load_text(triples, attrs);
    CHECK(lenient.snapshot.triple_count() == 1);
    CHECK(lenient.report.rejected.size() == 3);

    try {
        load_text(triples, attrs, true);
        FAIL("strict load accepted a bad row");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("strict load rejects undeclared endpoints") {
    CHECK_THROWS_AS(load_text("subject,relation,object,provenance\nA,contains,Ghost,curated\n",
                              "node_id,attr,value,unit,kind_hint,label\nA,,,,recipe,A\n", true),
                    Error);
}

TEST_CASE("recipes without contains edges are dropped and reported") {
    const auto r = load_text("subject,relation,object,provenance\nA,belongsToCuisine,Italian,curated\n",
                             "node_id,attr,value,unit,kind_hint,label\nA,,,,recipe,A\nItalian,,,,cuisine,Italian\n");
    CHECK_FALSE(r.snapshot.contains("A"));
    CHECK_FALSE(r.report.rejected.empty());
}

TEST_CASE("export of the fixture matches the input up to unit normalization") {
    std::ostringstream t, a;
    kg::export_triples(*fixture_snapshot(), t);
    kg::export_attrs(*fixture_snapshot(), a);
    CHECK(lines_of_text(t.str()) == lines_of(fixture_path("triples.csv")));
    CHECK(lines_of_text(a.str()) == in_grams(lines_of(fixture_path("attrs.csv"))));
}

TEST_CASE("neighbors") {
    const auto snap = fixture_snapshot();
    SUBCASE("contains of a recipe includes its ingredients") {
        const auto n = snap->neighbors("GrilledTofuWrap", "contains");
        CHECK(std::find(n.begin(), n.end(), kg::Neighbor{"contains", "Tofu"}) != n.end());
    }
    SUBCASE("an isolated node has none") {
        kg::UpsertBatch b;
        b.nodes.push_back({"Loner", "Loner", kg::NodeKind::ingredient, {}, {}});
        const auto next = snap->apply(b);
        REQUIRE(next);
        CHECK(next->neighbors("Loner", std::nullopt, kg::Direction::both).empty());
    }
    SUBCASE("unknown node") { CHECK_THROWS_AS(snap->neighbors("Nope"), Error); }
    SUBCASE("every node agrees with a scan of all edges") {
        const auto corpus = test::oracle::load(test::fixture_dir());
        for (const auto* node : snap->nodes()) {
            std::vector<kg::Neighbor> out, in;
            for (const auto& e : corpus.edges) {
                if (e.s == node->id) out.push_back({e.r, e.o});
                if (e.o == node->id) in.push_back({e.r, e.s});
            }
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            CHECK(snap->neighbors(node->id) == out);
            CHECK(snap->neighbors(node->id, std::nullopt, kg::Direction::in) == in);
        }
    }
}

TEST_CASE("upsert_edge versions") {
    kg::KgStore store(*fixture_snapshot());
    const kg::RelationEdge edge{"Lemon", "neutralizeOdor", "Fish", kg::Provenance::inferred, 0};
    const auto before = store.current();
    REQUIRE_FALSE(before->has_triple(edge.triple()));

    const auto after = store.upsert_edge(edge);
    CHECK(after->version() == before->version() + 1);
    CHECK(after->has_triple(edge.triple()));
    CHECK_FALSE(store.at(before->version())->has_triple(edge.triple()));
    CHECK(after->edge(edge.triple())->provenance == kg::Provenance::inferred);

    SUBCASE("the same triple again changes nothing") {
        const auto again = store.upsert_edge(edge);
        CHECK(again->version() == after->version());
        CHECK(again->triple_count() == after->triple_count());
    }
    SUBCASE("stale expected version") {
        CHECK_THROWS_AS(store.upsert_edge({"Lemon", "neutralizeOdor", "Shrimp", kg::Provenance::user, 0},
                                          before->version()),
                        Error);
    }
    SUBCASE("dangling endpoint") {
        CHECK_THROWS_AS(store.upsert_edge({"Lemon", "neutralizeOdor", "Nothing", kg::Provenance::user, 0}), Error);
    }
}

TEST_CASE("100 sequential upserts match a plain set") {
    kg::KgStore store(*fixture_snapshot());
    std::set<kg::Triple> oracle;
    for (const auto& e : fixture_snapshot()->edges()) oracle.insert(e.triple());
    const auto ingredients = fixture_snapshot()->ids_of_kind(kg::NodeKind::ingredient);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, ingredients.size() - 1);
    for (int i = 0; i < 100; ++i) {
        kg::RelationEdge e{ingredients[pick(rng)], "substitutableBy", ingredients[pick(rng)], kg::Provenance::user, 0};
        store.upsert_edge(e);
        oracle.insert(e.triple());
    }
    CHECK(store.current()->triple_count() == oracle.size());
    CHECK(store.audit_log().size() == store.version() - 1);
}

TEST_CASE("old versions stay readable past the retention window") {
    kg::StoreOptions o;
    o.retention = 2;
    kg::KgStore store(*fixture_snapshot(), o);
    const auto ingredients = fixture_snapshot()->ids_of_kind(kg::NodeKind::ingredient);
    std::vector<std::size_t> counts{store.current()->triple_count()};
    for (std::size_t i = 0; i + 1 < 8; ++i) {
        store.upsert_edge({ingredients[i], "substitutableBy", ingredients[i + 1], kg::Provenance::user, 0});
        counts.push_back(store.current()->triple_count());
    }
    CHECK(store.retained_versions().size() <= 3);
    for (std::uint64_t v = 1; v <= store.version(); ++v) CHECK(store.at(v)->triple_count() == counts[v - 1]);
    CHECK_THROWS_AS(store.at(99), Error);
}

TEST_CASE("audit records survive an NDJSON round trip") {
    std::ostringstream sink;
    kg::StoreOptions o;
    o.audit_sink = &sink;
    o.clock = [] { return std::int64_t{42}; };
    kg::KgStore store(*fixture_snapshot(), o);
    store.upsert_edge({"Lemon", "neutralizeOdor", "Fish", kg::Provenance::inferred, 0});
    const auto log = store.audit_log();
    REQUIRE(log.size() == 1);
    CHECK(kg::audit_from_ndjson(kg::to_ndjson(log[0])) == log[0]);
    CHECK(sink.str() == kg::to_ndjson(log[0]) + "\n");
}

TEST_CASE("reads against a published snapshot do not change under writes") {
    kg::KgStore store(*fixture_snapshot());
    const auto pinned = store.current();
    std::ostringstream before;
    kg::export_triples(*pinned, before);
    const auto nb = pinned->neighbors("Lemon", std::nullopt, kg::Direction::both);
    store.upsert_edge({"Lemon", "neutralizeOdor", "Fish", kg::Provenance::inferred, 0});
    store.upsert_edge({"Lemon", "substitutableBy", "Lime", kg::Provenance::user, 0});
    std::ostringstream after;
    kg::export_triples(*pinned, after);
    CHECK(before.str() == after.str());
    CHECK(pinned->neighbors("Lemon", std::nullopt, kg::Direction::both) == nb);
}

TEST_CASE("extract_subgraph") {
    const auto snap = fixture_snapshot();
    const auto corpus = test::oracle::load(test::fixture_dir());

    SUBCASE("one hop from a recipe") {
        const std::vector<std::string> seeds{"GrilledTofuWrap"};
        const auto v = kg::extract_subgraph(*snap, seeds, 1, 1000);
        CHECK(std::set<std::string>(v.nodes.begin(), v.nodes.end()) ==
              test::oracle::within_hops(corpus.edges, {"GrilledTofuWrap"}, 1));
        CHECK(v.nodes.front() == "GrilledTofuWrap");
    }
    SUBCASE("node budget equal to the seeds keeps only the seeds") {
        const std::vector<std::string> seeds{"GrilledTofuWrap", "Shakshuka"};
        const auto v = kg::extract_subgraph(*snap, seeds, 3, 2);
        CHECK(v.nodes == seeds);
    }
    SUBCASE("budgets below one and unknown seeds") {
        const std::vector<std::string> seeds{"GrilledTofuWrap"};
        CHECK_THROWS_AS(kg::extract_subgraph(*snap, seeds, 0, 10), Error);
        CHECK_THROWS_AS(kg::extract_subgraph(*snap, std::vector<std::string>{"Nope"}, 1, 10), Error);
        CHECK_THROWS_AS(kg::extract_subgraph(*snap, std::vector<std::string>{}, 1, 10), Error);
    }
    SUBCASE("two hops from every recipe equals repeated neighbor scans") {
        for (const auto& r : snap->ids_of_kind(kg::NodeKind::recipe)) {
            const std::vector<std::string> seeds{r};
            const auto v = kg::extract_subgraph(*snap, seeds, 2, 100000);
            CHECK(std::set<std::string>(v.nodes.begin(), v.nodes.end()) ==
                  test::oracle::within_hops(corpus.edges, {r}, 2));
        }
    }
    SUBCASE("soundness under tight budgets") {
        const auto recipes = snap->ids_of_kind(kg::NodeKind::recipe);
        for (int hops = 1; hops <= 3; ++hops) {
            for (int budget : {3, 10, 25, 60}) {
                const std::vector<std::string> seeds(recipes.begin(), recipes.begin() + 3);
                const auto v = kg::extract_subgraph(*snap, seeds, hops, budget);
                const std::set<std::string> nodes(v.nodes.begin(), v.nodes.end());
                CHECK(nodes.size() <= static_cast<std::size_t>(std::max<int>(budget, 3)));
                for (const auto& e : v.edges) {
                    CHECK(nodes.contains(e.subject));
                    CHECK(nodes.contains(e.object));
                }
                std::vector<test::oracle::Edge> inside;
                for (const auto& e : v.edges) inside.push_back({e.subject, e.relation, e.object});
                const auto reach = test::oracle::within_hops(inside, {seeds.begin(), seeds.end()}, hops);
                for (const auto& n : nodes) CHECK(reach.contains(n));
            }
        }
    }
    SUBCASE("blocked nodes are never admitted") {
        const std::vector<std::string> seeds{"Shakshuka"};
        const auto v = kg::extract_subgraph(*snap, seeds, 3, 1000, {"BlackPepper"});
        CHECK(std::find(v.nodes.begin(), v.nodes.end(), "BlackPepper") == v.nodes.end());
    }
}

TEST_CASE("composition closure follows contains, containsIngredient and derivesFrom") {
    const auto corpus = test::oracle::load(test::fixture_dir());
    for (const auto& r : fixture_snapshot()->ids_of_kind(kg::NodeKind::recipe)) {
        auto expected = test::oracle::composition(corpus, r);
        expected.erase(r);
        const auto got = kg::contains_closure(*fixture_snapshot(), r);
        CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    }
}
