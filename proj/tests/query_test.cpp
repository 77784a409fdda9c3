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
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "fixture.hpp"
#include "genie/error.hpp"
#include "genie/query/conflicts.hpp"
#include "genie/query/intent.hpp"
#include "genie/query/keywords.hpp"
#include "genie/query/parser.hpp"
#include "genie/query/resolve.hpp"
#include "oracle.hpp"

using namespace genie;
using namespace genie::query;
using genie::test::fixture_lexicon;
using genie::test::fixture_resources;
using genie::test::fixture_snapshot;

namespace {

ConstraintSet parse(const std::string& message, const TurnHistory& history = {}) {
    static const llm::Gateway gateway;
    const auto intent = classify_intent(message, history, &gateway);
    ParseOptions o;
    o.gateway = &gateway;
    return parse_constraints(message, intent, *fixture_snapshot(), fixture_lexicon(), fixture_resources(), o);
}

const Constraint* find_ref(const ConstraintSet& s, const std::string& ref) {
    for (const auto& c : s.constraints) {
        if (c.ref() == ref) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("classify_intent") {
    CHECK(classify_intent("Find me a vegan lunch under 400 kcal").category == IntentCategory::recipe_search);
    CHECK(classify_intent("remove soy sauce").category != IntentCategory::constraint_override);
    CHECK(classify_intent("remove soy sauce", {{"Find me a vegan lunch"}, true}).category ==
          IntentCategory::constraint_override);
    CHECK_THROWS_AS(classify_intent(""), Error);
    CHECK_THROWS_AS(classify_intent("   "), Error);
    const auto i = classify_intent("Hello there");
    CHECK(i.confidence >= 0.0);
    CHECK(i.confidence <= 1.0);
    CHECK_FALSE(i.rationale.empty());
}

TEST_CASE("the labelled intent set is reproduced exactly") {
    std::ifstream in(std::string(GENIE_TEST_DATA_DIR) + "/intents.tsv");
    REQUIRE(in);
    std::string line;
    std::getline(in, line);
    int n = 0;
    while (std::getline(in, line)) {
        const auto t1 = line.find('\t');
        const auto t2 = line.find('\t', t1 + 1);
        const bool has_rec = line.substr(0, t1) == "1";
        const auto label = line.substr(t1 + 1, t2 - t1 - 1);
        const auto message = line.substr(t2 + 1);
        INFO(message);
        CHECK(to_string(classify_intent(message, {{}, has_rec}).category) == label);
        ++n;
    }
    CHECK(n == 30);
}

TEST_CASE("extract_keywords") {
    SUBCASE("under 300 calories") {
        const auto k = extract_keywords("under 300 calories", fixture_lexicon());
        REQUIRE(k.size() == 1);
        REQUIRE(k[0].threshold);
        CHECK(k[0].threshold->comparator == Comparator::lt);
        CHECK(k[0].threshold->value == 300);
        CHECK(k[0].threshold->unit == kg::Unit::kcal);
        CHECK(k[0].threshold->nutrient == "calories");
    }
    SUBCASE("less than 10 grams of sugar") {
        const auto k = extract_keywords("less than 10 grams of sugar", fixture_lexicon());
        REQUIRE(k.size() == 1);
        REQUIRE(k[0].threshold);
        CHECK(k[0].threshold->nutrient == "sugar");
        CHECK(k[0].threshold->value == 10);
        CHECK(k[0].threshold->unit == kg::Unit::g);
    }
    SUBCASE("number words") {
        const auto k = extract_keywords("fewer than twelve grams of protein", fixture_lexicon());
        REQUIRE(k.size() == 1);
        CHECK(k[0].threshold->value == 12);
    }
    SUBCASE("nothing to find") { CHECK(extract_keywords("hello there", fixture_lexicon()).empty()); }
    SUBCASE("spans point back into the message") {
        const std::string msg = "Shakshuka with crushed tomato, no black pepper";
        for (const auto& k : extract_keywords(msg, fixture_lexicon())) {
            CHECK(msg.substr(k.begin, k.end - k.begin) == k.mention);
        }
    }
    SUBCASE("longest match wins") {
        const std::string msg = "I want crushed tomato and black pepper with olive oil";
        const auto k = extract_keywords(msg, fixture_lexicon());
        std::vector<std::string> targets;
        for (const auto& kw : k) {
            if (kw.target) targets.push_back(kw.target->value);
        }
        CHECK(std::find(targets.begin(), targets.end(), "CrushedTomato") != targets.end());
        CHECK(std::find(targets.begin(), targets.end(), "Tomato") == targets.end());
        CHECK(std::find(targets.begin(), targets.end(), "OliveOil") != targets.end());
        for (std::size_t i = 0; i < k.size(); ++i) {
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (i == j) continue;
                const bool inside = k[i].begin >= k[j].begin && k[i].end <= k[j].end;
                CHECK_FALSE((inside && (k[i].end - k[i].begin) < (k[j].end - k[j].begin)));
            }
        }
    }
}

TEST_CASE("resolve_entity") {
    const llm::Gateway gateway;
    SUBCASE("exact label") {
        const auto r = resolve_entity("Tofu", fixture_lexicon());
        CHECK(r.kind == ResolutionKind::exact);
        CHECK(r.node_id == "Tofu");
    }
    SUBCASE("broccolini goes through the synonym table") {
        const auto r = resolve_entity("broccolini", fixture_lexicon());
        CHECK(r.kind == ResolutionKind::substitute);
        CHECK(r.node_id == "Broccoli");
        CHECK(r.source == SubstituteSource::static_table);
    }
    SUBCASE("an unknown word with a gateway comes back as a proposal to confirm") {
        const auto r = resolve_entity("mushroomz", fixture_lexicon(), &gateway);
        CHECK(r.kind == ResolutionKind::substitute);
        CHECK(r.source == SubstituteSource::llm);
        CHECK_FALSE(r.proposals.empty());
    }
    SUBCASE("nonsense") { CHECK(resolve_entity("zzzz", fixture_lexicon()).kind == ResolutionKind::unresolved); }
    SUBCASE("every label resolves to its own node") {
        for (const auto* n : fixture_snapshot()->nodes()) {
            INFO(n->label);
            const auto r = resolve_entity(n->label, fixture_lexicon());
            CHECK(r.kind == ResolutionKind::exact);
            CHECK(r.node_id == n->id);
        }
    }
    SUBCASE("empty mention") { CHECK_THROWS_AS(resolve_entity("", fixture_lexicon()), Error); }
}

TEST_CASE("parse_constraints") {
    SUBCASE("reduce protein and salt uses the default caps") {
        const auto s = parse("I plan to reduce protein and salt intake");
        const auto* p = find_ref(s, "bound:protein:max");
        const auto* na = find_ref(s, "bound:sodium:max");
        REQUIRE(p);
        REQUIRE(na);
        CHECK(p->bound->comparator == Comparator::lt);
        CHECK(p->bound->value == 15);
        CHECK(p->bound->unit == kg::Unit::g);
        CHECK(na->bound->value == 500);
        CHECK(na->bound->unit == kg::Unit::mg);
    }
    SUBCASE("dislike means exclude") {
        const auto s = parse("I dislike shrimp");
        REQUIRE(s.constraints.size() == 1);
        CHECK(s.constraints[0].kind == ConstraintKind::exclude_entity);
        CHECK(s.constraints[0].key == "Shrimp");
    }
    SUBCASE("more fiber is a lower bound") {
        const auto* f = find_ref(parse("I want more fiber"), "bound:fiber:min");
        REQUIRE(f);
        CHECK_FALSE(is_upper(f->bound->comparator));
    }
    SUBCASE("cooking to retain nutrients is a method flag") {
        const auto* m = find_ref(parse("Please cook them to retain nutrients"), "method:highRetainNutrients");
        REQUIRE(m);
        CHECK(m->flag_value);
    }
    SUBCASE("tasty asks for clarification and never filters") {
        const auto s = parse("I want something tasty");
        REQUIRE(s.pending_clarifications.size() == 1);
        CHECK(s.pending_clarifications[0].term == "tasty");
        CHECK(s.pending_clarifications[0].candidates == std::vector<std::string>{"sweet", "savory", "high in umami"});
        for (const auto& c : s.effective()) CHECK(c.kind != ConstraintKind::subjective);
    }
    SUBCASE("vegan lunch under 400 kcal") {
        const auto s = parse("Find me a vegan lunch under 400 kcal");
        CHECK(find_ref(s, "flag:isVegan"));
        const auto* cal = find_ref(s, "bound:calories:max");
        REQUIRE(cal);
        CHECK(cal->bound->value == 400);
    }
    SUBCASE("negated class becomes a flag") {
        CHECK(find_ref(parse("Recommend something with no dairy"), "flag:isDairyFree"));
    }
    SUBCASE("broccolini records where the substitute came from") {
        const auto s = parse("I'd like broccolini");
        const auto* b = find_ref(s, "include:Broccoli");
        REQUIRE(b);
        CHECK(b->substituted_from == "broccolini");
    }
    SUBCASE("an unknown excluded word stays unresolved") {
        const auto s = parse("I hate mushroomz");
        REQUIRE(s.constraints.size() == 1);
        CHECK(s.constraints[0].unresolved);
        CHECK(s.effective().empty());
        REQUIRE_FALSE(s.pending_clarifications.empty());
    }
    SUBCASE("nothing parsable under a search intent") {
        const Intent search{IntentCategory::recipe_search, 0.9, ""};
        CHECK_THROWS_AS(parse_constraints("please find me something", search, *fixture_snapshot(), fixture_lexicon(),
                                          fixture_resources()),
                        Error);
    }
    SUBCASE("parsing is deterministic") {
        for (const auto* m : {"I plan to reduce protein and salt intake", "no black pepper, add crushed tomato",
                              "vegan but I love cheese", "under 300 calories and less than 10 grams of sugar"}) {
            CHECK(parse(m) == parse(m));
        }
    }
    SUBCASE("every bound carries a unit") {
        for (const auto* m : {"under 300 calories", "less than 10 grams of sugar", "reduce fat", "sodium below 400",
                              "at least 20 g protein", "more fiber"}) {
            for (const auto& c : parse(m).constraints) {
                if (c.kind == ConstraintKind::bound) CHECK(c.bound->unit != kg::Unit::none);
            }
        }
    }
}

TEST_CASE("detect_conflicts") {
    const auto& ent = fixture_resources().entailments;
    const auto& snap = *fixture_snapshot();
    SUBCASE("vegan and cheese") {
        const auto s = parse("I'm vegan but I love cheese");
        REQUIRE(s.conflicts.size() == 1);
        CHECK(s.conflicts[0].id() == "flag:isVegan=true|include:Cheese");
        CHECK(s.conflicts[0].status == ConflictStatus::unresolved);
    }
    SUBCASE("a lone calorie cap") {
        ConstraintSet s;
        s.constraints.push_back(make_bound("calories", Comparator::le, 400, kg::Unit::kcal));
        CHECK(detect_conflicts(s, snap, ent).conflicts.empty());
    }
    SUBCASE("bounds that cannot both hold, across units") {
        ConstraintSet s;
        s.constraints.push_back(make_bound("sodium", Comparator::lt, 300, kg::Unit::mg));
        s.constraints.push_back(make_bound("sodium", Comparator::ge, 0.3, kg::Unit::g));
        CHECK(detect_conflicts(s, snap, ent).conflicts.size() == 1);
        s.constraints[1] = make_bound("sodium", Comparator::ge, 0.2, kg::Unit::g);
        CHECK(detect_conflicts(s, snap, ent).conflicts.empty());
    }
    SUBCASE("random sets agree with a pairwise check") {
        const auto corpus = test::oracle::load(test::fixture_dir());
        auto classes_of = [&](const std::string& id) {
            std::set<std::string> out;
            for (const auto& p : test::oracle::composition(corpus, id)) {
                if (const auto it = corpus.categorical.find(p); it != corpus.categorical.end()) {
                    for (const auto& [k, v] : it->second) out.insert(v);
                }
            }
            return out;
        };
        auto grams = [](const Bound& b) { return b.unit == kg::Unit::mg ? b.value / 1000.0 : b.value; };
        auto pairwise = [&](const Constraint& a, const Constraint& b) {
            using K = ConstraintKind;
            if (a.kind == b.kind && a.key == b.key && a.kind != K::bound) {
                return a.flag_value != b.flag_value && (a.kind == K::flag || a.kind == K::method_flag);
            }
            if (a.key == b.key && ((a.kind == K::include_entity && b.kind == K::exclude_entity) ||
                                   (a.kind == K::exclude_entity && b.kind == K::include_entity))) {
                return true;
            }
            if (a.kind == K::bound && b.kind == K::bound && a.key == b.key) {
                const bool au = is_upper(a.bound->comparator), bu = is_upper(b.bound->comparator);
                if (au == bu) return !(*a.bound == *b.bound);
                const auto& lo = au ? *b.bound : *a.bound;
                const auto& hi = au ? *a.bound : *b.bound;
                const double l = grams(lo), h = grams(hi);
                return l > h || (l == h && (lo.comparator == Comparator::gt || hi.comparator == Comparator::lt));
            }
            const Constraint* flag = a.kind == K::flag ? &a : b.kind == K::flag ? &b : nullptr;
            const Constraint* inc = a.kind == K::include_entity ? &a : b.kind == K::include_entity ? &b : nullptr;
            if (flag && inc && flag->flag_value) {
                const auto cls = classes_of(inc->key);
                const auto range = corpus.forbids.equal_range(flag->key);
                for (auto it = range.first; it != range.second; ++it) {
                    if (cls.contains(it->second)) return true;
                }
            }
            return false;
        };

        std::mt19937 rng(11);
        int with_conflicts = 0;
        for (int round = 0; round < 200; ++round) {
            ConstraintSet s;
            for (int k = 0; k < 3; ++k) {
                for (auto& c : test::oracle::random_constraints(corpus, rng)) s.constraints.push_back(c);
            }
            std::set<std::pair<std::string, std::string>> expected;
            auto live = [](const Constraint& c) {
                return c.status == ConstraintStatus::active && !c.unresolved && c.kind != ConstraintKind::subjective &&
                       c.origin != Origin::learned;
            };
            for (std::size_t i = 0; i < s.constraints.size(); ++i) {
                for (std::size_t j = i + 1; j < s.constraints.size(); ++j) {
                    const auto& a = s.constraints[i];
                    const auto& b = s.constraints[j];
                    if (!live(a) || !live(b) || !pairwise(a, b)) continue;
                    auto x = signature(a), y = signature(b);
                    if (y < x) std::swap(x, y);
                    expected.insert({x, y});
                }
            }
            std::set<std::pair<std::string, std::string>> got;
            for (const auto& c : detect_conflicts(s, snap, ent).conflicts) got.insert({c.first, c.second});
            CHECK(got == expected);
            if (!expected.empty()) ++with_conflicts;
        }
        CHECK(with_conflicts > 20);
    }
}
