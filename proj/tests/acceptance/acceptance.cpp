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


// Acceptance checks, one line each. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "fixture.hpp"
#include "genie/api/json.hpp"
#include "genie/error.hpp"
#include "genie/kg/loader.hpp"
#include "genie/kg/subgraph.hpp"
#include "genie/llm/tasks.hpp"
#include "genie/match/matcher.hpp"
#include "genie/session/log.hpp"
#include "genie/session/session.hpp"
#include "http_harness.hpp"
#include "oracle.hpp"

using namespace genie;
namespace oracle = genie::test::oracle;
using nlohmann::json;
using session::ActionKind;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Verdict()>& check) {
    Verdict v;
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

const oracle::Corpus& corpus() {
    static const auto c = oracle::load(test::fixture_dir());
    return c;
}

const query::Entailments& entailments() { return test::fixture_resources().entailments; }

query::ConstraintSet set_of(std::vector<query::Constraint> cs) {
    query::ConstraintSet s;
    s.constraints = std::move(cs);
    return s;
}

std::size_t pick(std::mt19937& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Random user traffic: chat, staging, apply, undo, conflict resolution.
void random_session(session::Session& s, std::mt19937& rng, int steps) {
    static const std::vector<std::string> messages = {
        "I plan to reduce protein and salt intake", "no garlic please",  "Find me a vegan lunch under 400 kcal",
        "What are the nutritional values of these recipes?", "I want something tasty", "I want more fiber",
        "I'm vegan but I love cheese", "less than 10 grams of sugar", "I dislike shrimp", "asdf qwer"};
    const auto ingredients = corpus().ids_of("ingredient");
    for (int i = 0; i < steps; ++i) {
        try {
            switch (pick(rng, 6)) {
                case 0: s.route_turn(messages[pick(rng, messages.size())]); break;
                case 1:
                case 2:
                    s.stage_action(pick(rng, 2) ? ActionKind::exclude_node : ActionKind::include_node,
                                   ingredients[pick(rng, ingredients.size())]);
                    break;
                case 3: s.apply(); break;
                case 4:
                    if (!s.history().empty()) s.undo(s.history()[pick(rng, s.history().size())].id);
                    break;
                default: {
                    const auto cs = s.conflicts();
                    for (const auto& c : cs) {
                        if (c.status != query::ConflictStatus::unresolved) continue;
                        s.resolve_conflict(c.id(), pick(rng, 2) ? c.first : c.second);
                        break;
                    }
                }
            }
        } catch (const Error&) {
        }
    }
}

std::string state_bytes(const session::Session& s) {
    json j = {{"profile", session::to_json(s.profile())}, {"query_version", s.query_version()}};
    j["recommendation"] =
        s.recommendation() ? api::recommendation_json(*s.recommendation(), s.engine().snapshot()) : json();
    j["summary"] = s.summary();
    return j.dump();
}

Verdict oracle_equivalence() {
    std::mt19937 rng(2024);
    const auto t0 = Clock::now();
    int agree = 0;
    for (int i = 0; i < 200; ++i) {
        const auto s = set_of(oracle::random_constraints(corpus(), rng));
        const bool lenient = i % 2 == 1;
        if (match::candidate_retrieval(s, *test::fixture_snapshot(), entailments(), lenient) ==
            oracle::retrieve(corpus(), s.constraints, lenient)) {
            ++agree;
        }
    }
    const double t = seconds_since(t0);
    return {agree == 200 && t < 10, fmt("%.0f/200 constraint sets match brute force in %.2f s", agree, t)};
}

Verdict exclusion_soundness() {
    const auto t0 = Clock::now();
    const auto& snap = *test::fixture_snapshot();
    const auto& m = test::fixture_engine()->matcher();
    const auto recipes = corpus().ids_of("recipe");
    int bad = 0;
    int checked = 0;
    for (const auto& x : corpus().ids_of("ingredient")) {
        const auto s = set_of({query::make_exclude(x)});
        const auto got = match::candidate_retrieval(s, snap, entailments(), true);
        std::vector<std::string> want;
        for (const auto& r : recipes) {
            if (!oracle::composition(corpus(), r).contains(x)) want.push_back(r);
        }
        if (got != want) ++bad;
        try {
            const auto rec = m.recommend({&s, {}, m.config().max_detail, false}, snap);
            if (std::count(rec.subgraph.nodes.begin(), rec.subgraph.nodes.end(), x)) ++bad;
            for (const auto& r : rec.results) {
                if (oracle::composition(corpus(), r.recipe).contains(x)) ++bad;
            }
        } catch (const match::NoCandidates&) {
            if (!want.empty()) ++bad;
        }
        ++checked;
    }
    const double t = seconds_since(t0);
    return {bad == 0 && t < 10, fmt("%.0f ingredients excluded, %.0f violations, %.2f s", checked, bad, t)};
}

Verdict replay_determinism() {
    std::mt19937 rng(77);
    int identical = 0;
    for (int i = 0; i < 50; ++i) {
        std::ostringstream log;
        std::int64_t now = 1'700'000'000'000 + i;
        session::Session s(test::fixture_engine(), {[&now] { return now += 7; }, &log});
        random_session(s, rng, 30);
        std::istringstream a(log.str()), b(log.str());
        const auto first = session::replay(test::fixture_engine(), session::read_log(a));
        const auto second = session::replay(test::fixture_engine(), session::read_log(b));
        if (state_bytes(*first) == state_bytes(*second) && state_bytes(*first) == state_bytes(s)) ++identical;
    }
    return {identical == 50, fmt("%.0f/50 logs replay to byte-identical profiles and recommendations", identical)};
}

Verdict undo_inverse() {
    std::mt19937 rng(5);
    const auto ingredients = corpus().ids_of("ingredient");
    const std::vector<std::string> messages = {"I plan to reduce protein and salt intake", "no garlic please",
                                               "Find me a vegan lunch under 400 kcal", "I want more fiber",
                                               "I dislike shrimp"};
    int tried = 0, exact = 0;
    for (int base = 0; base < 6; ++base) {
        std::ostringstream log;
        session::Session seed(test::fixture_engine(), {{}, &log});
        random_session(seed, rng, 12);
        const auto history = seed.history();
        auto fresh = [&] { return session::replay(test::fixture_engine(), history); };

        for (const auto& node : ingredients) {
            for (const auto kind : {ActionKind::include_node, ActionKind::exclude_node}) {
                auto s = fresh();
                try {
                    s->apply();
                } catch (const Error&) {
                }
                const auto before = s->profile();
                const auto staged = s->stage_action(kind, node);
                try {
                    s->apply();
                } catch (const Error&) {
                    continue;
                }
                ++tried;
                s->undo(staged.action.id);
                exact += session::same_state(before, s->profile());
            }
        }
        for (const auto& m : messages) {
            auto s = fresh();
            const auto before = s->profile();
            s->route_turn(m);
            const auto id = s->history().back().id;
            ++tried;
            s->undo(id);
            exact += session::same_state(before, s->profile());
        }
        {
            auto s = fresh();
            s->route_turn("I'm vegan but I love cheese");
            for (const auto& c : s->conflicts()) {
                if (c.status != query::ConflictStatus::unresolved) continue;
                const auto before = s->profile();
                s->resolve_conflict(c.id(), c.first);
                ++tried;
                s->undo(s->history().back().id);
                exact += session::same_state(before, s->profile());
                break;
            }
        }
    }
    return {tried > 0 && exact == tried, fmt("%.0f/%.0f undos restored the prior profile exactly", exact, tried)};
}

Verdict subgraph_soundness() {
    std::mt19937 rng(31);
    const auto& snap = *test::fixture_snapshot();
    const auto& m = test::fixture_engine()->matcher();
    int views = 0, bad = 0;
    for (int i = 0; i < 60; ++i) {
        const auto s = set_of(oracle::random_constraints(corpus(), rng));
        match::Recommendation rec;
        try {
            rec = m.recommend({&s, {}, 1, false}, snap);
        } catch (const match::NoCandidates&) {
            continue;
        }
        std::set<std::string> seeds;
        for (const auto& r : rec.results) seeds.insert(r.recipe);
        std::set<std::string> blocked(rec.blocked.begin(), rec.blocked.end());
        std::set<std::string> prev;
        for (int k = 1; k <= 4; ++k) {
            const auto v = m.view(rec, snap, k);
            ++views;
            const auto [hops, budget] = match::detail_budgets(m.config(), k);
            const std::set<std::string> nodes(v.nodes.begin(), v.nodes.end());
            const auto reach = oracle::within_hops(corpus().edges, seeds, hops);
            bool ok = nodes.size() == v.nodes.size();
            ok &= v.nodes.size() <= std::max<std::size_t>(seeds.size(), static_cast<std::size_t>(budget));
            for (const auto& n : nodes) ok &= reach.contains(n) && (!blocked.contains(n) || seeds.contains(n));
            for (const auto& sd : seeds) ok &= nodes.contains(sd);
            std::size_t internal = 0;
            for (const auto& e : corpus().edges) internal += nodes.contains(e.s) && nodes.contains(e.o);
            ok &= internal == v.edges.size();
            for (const auto& e : v.edges) ok &= snap.has_triple(e) && nodes.contains(e.subject) && nodes.contains(e.object);
            ok &= std::includes(nodes.begin(), nodes.end(), prev.begin(), prev.end());
            prev = nodes;
            if (!ok) ++bad;
        }
    }
    return {views > 0 && bad == 0, fmt("%.0f views checked over detail levels 1-4, %.0f unsound or non-monotone", views, bad)};
}

Verdict caroline_over_http() {
    test::LiveServer srv(test::fixture_engine());
    auto run_once = [&](std::string& transcript) -> std::string {
        const auto t = srv.open_session();
        const auto base = "/sessions/" + t + "/";
        const auto first = srv.post(base + "chat", {{"message", "I plan to reduce protein and salt intake"}});
        if (first.status != 200) return "chat returned " + std::to_string(first.status);
        const auto& r1 = first.body.at("recommendation").at("results");
        if (r1.empty()) return "no recipe after the first turn";
        for (const auto& r : r1) {
            const auto& n = corpus().numeric.at(r.at("recipe").get<std::string>());
            if (!(n.at("protein") < 15 && n.at("sodium") < 0.5)) return r.at("recipe").get<std::string>() + " out of bounds";
        }
        srv.post(base + "interactions", {{"kind", "exclude"}, {"node_id", "BlackPepper"}});
        srv.post(base + "interactions", {{"kind", "include"}, {"node_id", "CrushedTomato"}});
        const auto applied = srv.post(base + "apply");
        if (applied.status != 200) return "apply returned " + std::to_string(applied.status);
        const auto& r2 = applied.body.at("recommendation").at("results");
        if (r2.empty()) return "no recipe after apply";
        int with_tomato = 0;
        for (const auto& r : r2) {
            const auto id = r.at("recipe").get<std::string>();
            const auto parts = oracle::composition(corpus(), id);
            if (parts.contains("BlackPepper")) return id + " still contains BlackPepper";
            if (oracle::check(corpus(), query::make_include("CrushedTomato"), id) != oracle::Verdict::yes) {
                return id + " does not satisfy the CrushedTomato include";
            }
            with_tomato += parts.contains("CrushedTomato");
        }
        if (with_tomato == 0) return "no result contains CrushedTomato";
        transcript = first.body.at("recommendation").dump() + applied.body.at("recommendation").dump() +
                     applied.body.at("summary").dump();
        return "";
    };
    std::string a, b;
    if (const auto e = run_once(a); !e.empty()) return {false, e};
    if (const auto e = run_once(b); !e.empty()) return {false, e};
    return {a == b, a == b ? "bounded recipes, then CrushedTomato without BlackPepper; two runs identical"
                           : "two runs differ"};
}

llm::SummaryPayload fuzz_payload(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(0, 2000);
    std::uniform_real_distribution<double> real(0, 80);
    llm::SummaryPayload p;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) {
        llm::DishFacts d;
        d.name = "Dish " + std::to_string(small(rng));
        d.id = d.name;
        d.status = small(rng) % 4 ? "full" : "borderline";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d kcal", small(rng));
        d.attrs.push_back(buf);
        std::snprintf(buf, sizeof buf, "%.3g g protein", real(rng));
        d.attrs.push_back(buf);
        std::snprintf(buf, sizeof buf, "sodium < %d mg", small(rng));
        d.satisfied.push_back(buf);
        if (d.status == "borderline") d.unknown.push_back("fiber unknown");
        if (small(rng) % 2) d.tags.push_back("is high in protein");
        p.dishes.push_back(std::move(d));
    }
    return p;
}

Verdict grounding() {
    std::mt19937 rng(404);
    static const std::regex numeral(R"(\d+(?:\.\d+)?)");
    const auto& gateway = test::fixture_engine()->gateway();
    const auto& m = test::fixture_engine()->matcher();
    int ungrounded = 0;
    int payloads = 0;
    for (int i = 0; i < 200; ++i) {
        llm::SummaryPayload p;
        if (i % 2 == 0) {
            p = fuzz_payload(rng);
        } else {
            const auto s = set_of(oracle::random_constraints(corpus(), rng));
            try {
                p = m.recommend({&s, {}, 1, i % 4 == 1}, *test::fixture_snapshot()).summary_payload;
            } catch (const match::NoCandidates&) {
                p = fuzz_payload(rng);
            }
        }
        ++payloads;
        const auto text = llm::generate_summary(gateway, p);
        const auto source = llm::to_json(p).dump();
        std::set<std::string> allowed;
        for (std::sregex_iterator it(source.begin(), source.end(), numeral), end; it != end; ++it) allowed.insert(it->str());
        for (std::sregex_iterator it(text.begin(), text.end(), numeral), end; it != end; ++it) {
            if (!allowed.contains(it->str())) ++ungrounded;
        }
    }
    return {ungrounded == 0, fmt("%.0f payloads summarized, %.0f ungrounded numerals", payloads, ungrounded)};
}

Verdict synthetic_scale() {
    constexpr int kRecipes = 20'000;
    constexpr int kIngredients = 80'000;
    std::mt19937 rng(9);
    std::string attrs = "node_id,attr,value,unit,kind_hint,label\n";
    std::string triples = "subject,relation,object,provenance\n";
    attrs.reserve(5'000'000);
    triples.reserve(12'000'000);
    for (int i = 0; i < kRecipes; ++i) {
        const auto id = "R" + std::to_string(i);
        attrs += id + ",,,,recipe," + id + "\n";
    }
    for (int i = 0; i < kIngredients; ++i) {
        const auto id = "I" + std::to_string(i);
        attrs += id + ",,,,ingredient," + id + "\n";
    }
    std::set<std::pair<int, int>> contains;
    for (int r = 0; r < kRecipes; ++r) {
        while (contains.size() < static_cast<std::size_t>(r + 1) * 10) {
            contains.insert({r, static_cast<int>(pick(rng, kIngredients))});
        }
    }
    for (const auto& [r, i] : contains) triples += "R" + std::to_string(r) + ",contains,I" + std::to_string(i) + ",curated\n";
    std::set<std::pair<int, int>> subs;
    while (subs.size() < 100'000) {
        const int a = static_cast<int>(pick(rng, kIngredients)), b = static_cast<int>(pick(rng, kIngredients));
        if (a != b) subs.insert({a, b});
    }
    for (const auto& [a, b] : subs) triples += "I" + std::to_string(a) + ",substitutableBy,I" + std::to_string(b) + ",curated\n";

    const auto t0 = Clock::now();
    std::istringstream t(triples), a(attrs);
    const auto loaded = kg::load_triples(t, a);
    const std::vector<std::string> seeds = {"R0", "R1", "R2", "R3", "R4"};
    const auto view = kg::extract_subgraph(loaded.snapshot, seeds, 2, 1'000'000);
    const double elapsed = seconds_since(t0);

    const bool sized = loaded.snapshot.node_count() == kRecipes + kIngredients && loaded.snapshot.triple_count() == 300'000;
    std::vector<oracle::Edge> edges;
    edges.reserve(300'000);
    for (const auto& [r, i] : contains) edges.push_back({"R" + std::to_string(r), "contains", "I" + std::to_string(i)});
    for (const auto& [x, y] : subs) edges.push_back({"I" + std::to_string(x), "substitutableBy", "I" + std::to_string(y)});
    const auto want = oracle::within_hops(edges, {seeds.begin(), seeds.end()}, 2);
    const bool exact = std::set<std::string>(view.nodes.begin(), view.nodes.end()) == want;
    return {sized && exact && elapsed < 5,
            fmt("100000 nodes / 300000 triples ingested and hop-2 view of %.0f nodes in %.2f s (matches oracle: %.0f)",
                static_cast<double>(view.nodes.size()), elapsed, exact)};
}

Verdict conflicts() {
    std::string detail;
    {
        session::Session s(test::fixture_engine());
        const auto t = s.route_turn("I'm vegan but I love cheese");
        if (t.conflicts.size() != 1 || t.conflicts[0].id() != "flag:isVegan=true|include:Cheese") {
            return {false, "vegan/cheese not flagged"};
        }
        s.stage_action(ActionKind::include_node, "Tofu");
        bool blocked = false;
        try {
            s.apply();
        } catch (const Error& e) {
            blocked = e.code() == ErrorCode::unresolved_conflict;
        }
        if (!blocked) return {false, "apply was not blocked by the open conflict"};
        s.resolve_conflict(t.conflicts[0].id(), "flag:isVegan=true");
        s.apply();
    }

    // Random sets seeded with a flag and a node it forbids.
    std::mt19937 rng(61);
    const auto& c = corpus();
    std::vector<std::pair<std::string, std::string>> forbidden_pairs;
    for (const auto& [flag, cls] : c.forbids) {
        for (const auto& id : c.ids_of("ingredient")) {
            for (const auto& p : oracle::composition(c, id)) {
                const auto it = c.categorical.find(p);
                if (it == c.categorical.end()) continue;
                for (const auto& [k, v] : it->second) {
                    if (v == cls) forbidden_pairs.emplace_back(flag, id);
                }
            }
        }
    }
    const auto& snap = *test::fixture_snapshot();
    const session::FoldContext ctx{&snap, &entailments(), 3};
    int total = 0, settled = 0, flagged = 0;
    for (int round = 0; round < 100; ++round) {
        std::vector<session::InteractionAction> actions;
        std::map<std::uint64_t, session::ParsedTurn> parsed;
        std::uint64_t id = 1;
        for (int turn = 0; turn < 3; ++turn) {
            session::ParsedTurn p;
            if (turn == 0 || pick(rng, 2)) {
                const auto& [flag, node] = forbidden_pairs[pick(rng, forbidden_pairs.size())];
                p.constraints.push_back(query::make_flag(flag));
                if (turn == 0) p.constraints.push_back(query::make_include(node));
            }
            for (auto& k : oracle::random_constraints(c, rng)) p.constraints.push_back(k);
            if (turn == 1) {
                const auto& [flag, node] = forbidden_pairs[pick(rng, forbidden_pairs.size())];
                (void)flag;
                p.constraints.push_back(query::make_include(node));
            }
            for (auto& k : p.constraints) {
                k.turn = turn + 1;
                k.source_action = id;
            }
            parsed[id] = p;
            actions.push_back({id, ActionKind::text_query, "turn", static_cast<std::int64_t>(id), session::ActionStatus::applied});
            ++id;
        }
        ++total;
        auto profile = session::fold_profile(actions, parsed, ctx);
        auto open = [&] {
            std::vector<query::Conflict> out;
            for (const auto& k : profile.active_constraints.conflicts) {
                if (k.status == query::ConflictStatus::unresolved) out.push_back(k);
            }
            return out;
        };
        if (!open().empty()) ++flagged;
        bool ok = true;
        for (int guard = 0; guard < 64 && !open().empty(); ++guard) {
            const auto k = open().front();
            const auto keep = pick(rng, 2) ? k.first : k.second;
            actions.push_back({id, ActionKind::clarification_answer, session::resolve_answer(k.id(), keep),
                               static_cast<std::int64_t>(id), session::ActionStatus::applied});
            ++id;
            profile = session::fold_profile(actions, parsed, ctx);
            bool recorded = false;
            for (const auto& r : profile.active_constraints.conflicts) {
                if (r.id() == k.id()) recorded = r.status == query::ConflictStatus::resolved && r.winner == keep;
            }
            ok &= recorded;
        }
        if (ok && open().empty()) ++settled;
    }
    return {settled == total && flagged == total,
            fmt("vegan/cheese flagged and blocks apply; %.0f/%.0f random conflicting sets fully resolved (%.0f flagged)",
                settled, total, flagged)};
}

}  // namespace

int main() {
    report("oracle-equivalence", oracle_equivalence);
    report("exclusion-soundness", exclusion_soundness);
    report("replay-determinism", replay_determinism);
    report("undo-inverse", undo_inverse);
    report("subgraph-soundness", subgraph_soundness);
    report("caroline-over-http", caroline_over_http);
    report("summary-grounding", grounding);
    report("synthetic-scale", synthetic_scale);
    report("conflict-resolution", conflicts);
    return failures;
}
