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


#include "genie/llm/tasks.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace genie::llm {

using nlohmann::json;

json to_json(const SummaryPayload& payload) {
    json dishes = json::array();
    for (const auto& d : payload.dishes) {
        dishes.push_back({{"id", d.id},
                          {"name", d.name},
                          {"status", d.status},
                          {"attrs", d.attrs},
                          {"satisfied", d.satisfied},
                          {"unknown", d.unknown},
                          {"tags", d.tags}});
    }
    json j = {{"dishes", dishes}};
    if (!payload.question.empty()) j["question"] = payload.question;
    return j;
}

SummaryPayload summary_payload_from_json(const json& j) {
    SummaryPayload p;
    p.question = j.value("question", "");
    for (const auto& d : j.at("dishes")) {
        DishFacts f;
        f.id = d.value("id", "");
        f.name = d.value("name", "");
        f.status = d.value("status", "full");
        f.attrs = d.value("attrs", std::vector<std::string>{});
        f.satisfied = d.value("satisfied", std::vector<std::string>{});
        f.unknown = d.value("unknown", std::vector<std::string>{});
        f.tags = d.value("tags", std::vector<std::string>{});
        p.dishes.push_back(std::move(f));
    }
    return p;
}

std::vector<std::string> extract_numerals(std::string_view text) {
    std::vector<std::string> out;
    const auto digit = [&](std::size_t i) { return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); };
    std::size_t i = 0;
    while (i < text.size()) {
        if (!digit(i)) {
            ++i;
            continue;
        }
        const auto start = i;
        while (digit(i)) ++i;
        if (i < text.size() && text[i] == '.' && digit(i + 1)) {
            ++i;
            while (digit(i)) ++i;
        }
        out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

namespace {

void collect(const json& j, std::set<std::string>& out) {
    if (j.is_string()) {
        for (auto& n : extract_numerals(j.get_ref<const std::string&>())) out.insert(std::move(n));
    } else if (j.is_number()) {
        for (auto& n : extract_numerals(kg::format_number(j.get<double>()))) out.insert(std::move(n));
    } else if (j.is_structured()) {
        for (const auto& v : j) collect(v, out);
    }
}

}  // namespace

std::vector<std::string> payload_numerals(const SummaryPayload& payload) {
    std::set<std::string> s;
    collect(to_json(payload), s);
    return {s.begin(), s.end()};
}

std::vector<std::string> ungrounded_numerals(std::string_view text, const SummaryPayload& payload) {
    const auto known = payload_numerals(payload);
    std::vector<std::string> out;
    for (auto& n : extract_numerals(text)) {
        if (!std::binary_search(known.begin(), known.end(), n)) out.push_back(std::move(n));
    }
    return out;
}

std::string generate_summary(const Gateway& gateway, const SummaryPayload& payload) {
    if (payload.dishes.empty()) return kEmptySummary;
    const auto envelope = make_envelope(Task::summary, to_json(payload));
    const auto response = gateway.complete(envelope, [&](const json& r) -> std::optional<std::string> {
        const auto bad = ungrounded_numerals(r.at("text").get<std::string>(), payload);
        if (bad.empty()) return std::nullopt;
        return "summary mentions " + bad.front() + ", which is not in the payload";
    });
    return response.at("text").get<std::string>();
}

std::vector<std::string> generate_queries(const Gateway& gateway, const QueryContext& context) {
    const auto envelope = make_envelope(
        Task::query_generation,
        {{"constraint_refs", context.constraint_refs}, {"dishes", context.dishes}, {"turns", context.turns}});
    auto suggestions = gateway.complete(envelope).at("suggestions").get<std::vector<std::string>>();
    if (suggestions.size() > 3) suggestions.resize(3);
    return suggestions;
}

std::vector<kg::RelationEdge> extract_relations(const Gateway& gateway, std::string_view text,
                                                const SurfaceResolver& resolve,
                                                const kg::RelationRegistry& relations) {
    std::vector<kg::RelationEdge> out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
    const auto response = gateway.complete(make_envelope(Task::relation_extraction, {{"text", std::string(text)}}));
    for (const auto& r : response.at("relations")) {
        const auto relation = r.at("relation").get<std::string>();
        if (!relations.contains(relation)) continue;
        const auto s = resolve(r.at("subject").get<std::string>());
        const auto o = resolve(r.at("object").get<std::string>());
        if (!s || !o || *s == *o) continue;
        kg::RelationEdge e{*s, relation, *o, kg::Provenance::inferred, 0};
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
}

std::vector<std::string> propose_synonyms(const Gateway& gateway, const std::string& term,
                                          const std::vector<std::string>& vocabulary) {
    const auto response =
        gateway.complete(make_envelope(Task::synonym_proposal, {{"term", term}, {"vocabulary", vocabulary}}));
    return response.at("proposals").get<std::vector<std::string>>();
}

std::string clarification_question(const Gateway& gateway, const std::string& term,
                                   const std::vector<std::string>& candidates) {
    const auto response =
        gateway.complete(make_envelope(Task::clarification, {{"term", term}, {"candidates", candidates}}));
    return response.at("question").get<std::string>();
}

}  // namespace genie::llm
