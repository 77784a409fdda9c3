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


#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "fixture.hpp"
#include "genie/cli/cli.hpp"
#include "genie/error.hpp"
#include "genie/llm/gateway.hpp"
#include "genie/llm/schema.hpp"
#include "genie/llm/tasks.hpp"
#include "httplib.h"

using namespace genie;
using namespace genie::llm;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::invalid_argument;
}

SummaryPayload tofu_wrap() {
    DishFacts d;
    d.id = "GrilledTofuWrap";
    d.name = "Grilled Tofu Wrap";
    d.status = "full";
    d.attrs = {"320 kcal", "18 g protein"};
    d.satisfied = {"vegan", "calories < 400 kcal"};
    d.tags = {"excludes dairy", "is moderately high in protein"};
    return {{d}, ""};
}

// Numerals in `text`, by regex, independent of extract_numerals.
std::set<std::string> numerals(const std::string& text) {
    static const std::regex re(R"(\d+(?:\.\d+)?)");
    std::set<std::string> out;
    for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) out.insert(it->str());
    return out;
}

SummaryPayload random_payload(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 5), small(0, 999);
    std::uniform_real_distribution<double> real(0, 60);
    const std::vector<std::string> names = {"Lentil Soup", "Shakshuka", "Oat Bowl 2", "Tofu Wrap", "Curry"};
    SummaryPayload p;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        DishFacts d;
        d.name = names[static_cast<std::size_t>(small(rng)) % names.size()];
        d.id = d.name;
        d.status = small(rng) % 3 ? "full" : "borderline";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d kcal", small(rng));
        d.attrs.push_back(buf);
        std::snprintf(buf, sizeof buf, "%.2f g sugar", real(rng));
        d.attrs.push_back(buf);
        std::snprintf(buf, sizeof buf, "sodium < %d mg", small(rng));
        d.satisfied.push_back(buf);
        if (d.status == "borderline") d.unknown.push_back("missing fiber");
        if (small(rng) % 2) d.tags.push_back("excludes dairy");
        p.dishes.push_back(std::move(d));
    }
    return p;
}

// Stand-in for a remote provider on a loopback port.
class FakeProvider {
public:
    explicit FakeProvider(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
        server_.Post("/v1/complete", [this, handler](const httplib::Request& req, httplib::Response& res) {
            ++calls;
            last_auth = req.get_header_value("Authorization");
            handler(req, res);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FakeProvider() {
        server_.stop();
        thread_.join();
    }
    ProviderConfig config(int retries = 2, int timeout_ms = 2000) const {
        return {"provider_a", "http://127.0.0.1:" + std::to_string(port_) + "/v1/complete", "GENIE_TEST_KEY",
                timeout_ms, retries};
    }

    std::atomic<int> calls{0};
    std::string last_auth;

private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

void reply(httplib::Response& res, const json& output) { res.set_content(json{{"output", output}}.dump(), "application/json"); }

}  // namespace

TEST_CASE("provider config validation names the key") {
    CHECK_NOTHROW(validate(ProviderConfig{}));
    auto message = [](ProviderConfig c) {
        try {
            validate(c);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::config_error);
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message({"provider_z", "", "", 1000, 1}).find("provider") != std::string::npos);
    CHECK(message({"mock", "", "", 0, 1}).find("timeout_ms") != std::string::npos);
    CHECK(message({"mock", "", "", 100, -1}).find("max_retries") != std::string::npos);
    CHECK(message({"provider_b", "", "KEY", 100, 1}).find("endpoint") != std::string::npos);
    CHECK(message({"provider_b", "http://x", "", 100, 1}).find("credential_env") != std::string::npos);
}

TEST_CASE("envelopes are a pure function of their inputs") {
    const json in = {{"message", "Find me a vegan lunch"}, {"has_recommendation", false}};
    const auto a = make_envelope(Task::intent_classification, in);
    const auto b = make_envelope(Task::intent_classification, in);
    CHECK(a.rendered_prompt == b.rendered_prompt);
    CHECK(a.response_schema == response_schema(Task::intent_classification));
    for (const auto t : {Task::intent_classification, Task::summary, Task::query_generation, Task::relation_extraction,
                         Task::synonym_proposal, Task::clarification}) {
        CHECK(parse_task(to_string(t)) == t);
    }
}

TEST_CASE("schema subset") {
    const json schema = {{"type", "object"},
                         {"required", {"n", "tags"}},
                         {"properties",
                          {{"n", {{"type", "integer"}, {"minimum", 0}, {"maximum", 5}}},
                           {"tags", {{"type", "array"}, {"items", {{"type", "string"}}}, {"minItems", 1}}},
                           {"kind", {{"type", "string"}, {"enum", {"a", "b"}}}}}}};
    CHECK_FALSE(llm::validate(json{{"n", 3}, {"tags", {"x"}}}, schema));
    CHECK(llm::validate(json{{"n", 3}}, schema));
    CHECK(llm::validate(json{{"n", 9}, {"tags", {"x"}}}, schema));
    CHECK(llm::validate(json{{"n", 1.5}, {"tags", {"x"}}}, schema));
    CHECK(llm::validate(json{{"n", 1}, {"tags", json::array()}}, schema));
    CHECK(llm::validate(json{{"n", 1}, {"tags", {2}}}, schema));
    CHECK(llm::validate(json{{"n", 1}, {"tags", {"x"}}, {"kind", "c"}}, schema));
    CHECK(llm::validate(json::array(), schema));
}

TEST_CASE("mock gateway is deterministic") {
    const Gateway g;
    CHECK(g.is_mock());
    const auto env = make_envelope(Task::summary, to_json(tofu_wrap()));
    const auto first = g.complete(env);
    for (int i = 0; i < 1000; ++i) CHECK(g.complete(env) == first);
}

TEST_CASE("summaries") {
    const Gateway g;
    SUBCASE("empty payload") { CHECK(generate_summary(g, {}) == kEmptySummary); }
    SUBCASE("tofu wrap") {
        const auto text = generate_summary(g, tofu_wrap());
        CHECK(text.find("320") != std::string::npos);
        CHECK(text.find("dairy") != std::string::npos);
        CHECK(text.find("\n\n") == std::string::npos);
    }
    SUBCASE("one paragraph per dish") {
        auto p = tofu_wrap();
        p.dishes.push_back(p.dishes[0]);
        p.dishes[1].name = "Lentil Soup";
        const auto text = generate_summary(g, p);
        CHECK(text.find("\n\n") != std::string::npos);
        CHECK(text.find("\n\n") == text.rfind("\n\n"));
    }
    SUBCASE("payload json round trip") {
        const auto p = tofu_wrap();
        CHECK(summary_payload_from_json(to_json(p)) == p);
    }
}

TEST_CASE("numeral extraction") {
    CHECK(extract_numerals("has 320 kcal and 0.45 g of sodium, 12.") == std::vector<std::string>{"320", "0.45", "12"});
    CHECK(extract_numerals("no digits").empty());
    CHECK(ungrounded_numerals("320 kcal and 999 mg", tofu_wrap()) == std::vector<std::string>{"999"});
}

TEST_CASE("fuzzed payloads never produce an ungrounded numeral") {
    const Gateway g;
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_payload(rng);
        const auto text = generate_summary(g, p);
        const auto allowed = numerals(to_json(p).dump());
        for (const auto& n : numerals(text)) {
            INFO(text);
            CHECK(allowed.contains(n));
        }
    }
}

TEST_CASE("remote provider") {
    ::setenv("GENIE_TEST_KEY", "secret-token", 1);

    SUBCASE("well-formed answers pass through with the bearer token") {
        FakeProvider fake([](const httplib::Request&, httplib::Response& res) {
            reply(res, {{"text", "Grilled Tofu Wrap has 320 kcal."}});
        });
        const Gateway g(fake.config(), std::make_shared<HttpProvider>(fake.config()));
        CHECK(generate_summary(g, tofu_wrap()) == "Grilled Tofu Wrap has 320 kcal.");
        CHECK(fake.last_auth == "Bearer secret-token");
    }
    SUBCASE("invented numbers are re-asked then rejected") {
        FakeProvider fake([](const httplib::Request&, httplib::Response& res) {
            reply(res, {{"text", "Grilled Tofu Wrap has only 999 mg of sodium."}});
        });
        const Gateway g(fake.config(2), std::make_shared<HttpProvider>(fake.config(2)));
        CHECK(code_of([&] { generate_summary(g, tofu_wrap()); }) == ErrorCode::schema_violation);
        CHECK(fake.calls == 3);
    }
    SUBCASE("a retry can recover") {
        FakeProvider fake([](const httplib::Request&, httplib::Response& res) {
            static int n = 0;
            if (n++ == 0) {
                res.set_content("not json", "text/plain");
            } else {
                reply(res, {{"text", "Grilled Tofu Wrap has 320 kcal."}});
            }
        });
        const Gateway g(fake.config(1), std::make_shared<HttpProvider>(fake.config(1)));
        CHECK(generate_summary(g, tofu_wrap()) == "Grilled Tofu Wrap has 320 kcal.");
        CHECK(fake.calls == 2);
    }
    SUBCASE("slow provider times out") {
        FakeProvider fake([](const httplib::Request&, httplib::Response& res) {
            std::this_thread::sleep_for(std::chrono::milliseconds(600));
            reply(res, {{"text", "late"}});
        });
        const Gateway g(fake.config(0, 100), std::make_shared<HttpProvider>(fake.config(0, 100)));
        CHECK(code_of([&] { generate_summary(g, tofu_wrap()); }) == ErrorCode::provider_timeout);
    }
    SUBCASE("server errors") {
        FakeProvider fake([](const httplib::Request&, httplib::Response& res) { res.status = 500; });
        const Gateway g(fake.config(), std::make_shared<HttpProvider>(fake.config()));
        CHECK(code_of([&] { generate_summary(g, tofu_wrap()); }) == ErrorCode::provider_error);
    }
    SUBCASE("missing credential") {
        ::unsetenv("GENIE_TEST_KEY");
        const Gateway g(ProviderConfig{"provider_a", "http://127.0.0.1:9/v1", "GENIE_TEST_KEY", 100, 0});
        CHECK(code_of([&] { generate_summary(g, tofu_wrap()); }) == ErrorCode::credential_missing);
    }
}

TEST_CASE("suggested queries") {
    const Gateway g;
    const auto fresh = generate_queries(g, {});
    CHECK(fresh.size() == 3);
    const auto sodium = generate_queries(g, {{"bound:sodium:max", "flag:isVegan"}, {"Shakshuka"}, 2});
    REQUIRE(sodium.size() == 3);
    CHECK(sodium[0].find("sodium") != std::string::npos);
    CHECK(sodium[0].find("Shakshuka") != std::string::npos);
    for (const auto& q : fresh) CHECK_FALSE(q.empty());
}

TEST_CASE("relation extraction over the notes file") {
    const Gateway g;
    const auto snap = test::fixture_snapshot();
    std::ifstream in(test::fixture_path("notes.txt"));
    std::stringstream text;
    text << in.rdbuf();
    const auto resolve = [&](const std::string& s) { return cli::resolve_surface(test::fixture_lexicon(), *snap, s); };
    const auto edges = extract_relations(g, text.str(), resolve, snap->relations());

    std::set<std::tuple<std::string, std::string, std::string>> got;
    for (const auto& e : edges) {
        CHECK(e.provenance == kg::Provenance::inferred);
        got.insert({e.subject, e.relation, e.object});
    }
    const std::set<std::tuple<std::string, std::string, std::string>> expected = {
        {"Lemon", "neutralizeOdor", "Fish"},
        {"Butter", "substitutableBy", "OliveOil"},
        {"Quinoa", "recommendsFor", "Diabetes"},
        {"CrushedTomato", "containsIngredient", "Tomato"},
    };
    CHECK(got == expected);
    CHECK(extract_relations(g, "   ", resolve, snap->relations()).empty());
    CHECK(extract_relations(g, "Some people enjoy walks.", resolve, snap->relations()).empty());
}

TEST_CASE("synonym proposals and clarification questions") {
    const Gateway g;
    const auto p = propose_synonyms(g, "tomatos", {"tomato", "crushed tomato", "tofu"});
    REQUIRE_FALSE(p.empty());
    CHECK(p[0] == "tomato");
    const auto q = clarification_question(g, "tasty", {"sweet", "savory"});
    CHECK(q.find("tasty") != std::string::npos);
    CHECK_FALSE(clarification_question(g, "", {}).empty());
}
