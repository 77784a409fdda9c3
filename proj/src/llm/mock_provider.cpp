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
#include <cctype>
#include <regex>
#include <set>

#include "genie/error.hpp"
#include "genie/llm/provider.hpp"

namespace genie::llm {

using nlohmann::json;

namespace {

std::vector<std::string> words(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isalnum(c) || ch == '\'') {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// "a", "a or b", "a, b, or c"
std::string join_list(const std::vector<std::string>& items, std::string_view conj) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            if (items.size() > 2) out += ",";
            out += " ";
            if (i + 1 == items.size()) out += std::string(conj) + " ";
        }
        out += items[i];
    }
    return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

const std::set<std::string> kOverrideWords = {"remove", "instead", "without", "exclude", "add",
                                              "swap",   "replace", "don't",   "dislike", "avoid",
                                              "no",     "drop",    "skip"};
const std::set<std::string> kStrongSearch = {"recommend", "find", "suggest", "show", "give", "search", "looking"};
const std::set<std::string> kSearchWords = {
    "recommend", "find",   "suggest", "show",   "give",    "want",     "need",  "looking", "search", "cook",
    "make",      "plan",   "prefer",  "dislike", "avoid",  "reduce",   "lower", "increase", "like",  "love",
    "craving",   "eat",    "hate"};
const std::set<std::string> kQuestionStarts = {"what", "how",  "why", "which",  "when", "where", "who",
                                               "is",   "are",  "does", "do",    "can",  "should", "could"};
const std::set<std::string> kDomainWords = {"vegan", "vegetarian", "kcal", "calories", "calorie", "protein",
                                            "sodium", "salt", "sugar", "fiber", "recipe", "recipes", "dish",
                                            "dishes", "meal", "lunch", "dinner", "breakfast", "gluten", "dairy"};

bool any_in(const std::vector<std::string>& ws, const std::set<std::string>& table) {
    return std::any_of(ws.begin(), ws.end(), [&](const std::string& w) { return table.contains(w); });
}

json classify(const json& in) {
    const auto ws = words(in.value("message", ""));
    const bool has_rec = in.value("has_recommendation", false);
    auto result = [](const char* category, double confidence, std::string rationale) {
        return json{{"category", category}, {"confidence", confidence}, {"rationale", std::move(rationale)}};
    };
    if (ws.empty()) return result("general_clarification", 0.5, "no words");
    if (has_rec && any_in(ws, kOverrideWords)) {
        return result("constraint_override", 0.9, "change requested after a recommendation");
    }
    if (kQuestionStarts.contains(ws.front()) && !any_in(ws, kStrongSearch)) {
        return result("information_request", 0.8, "question form");
    }
    if (any_in(ws, kSearchWords)) return result("recipe_search", 0.85, "search verb");
    if (any_in(ws, kDomainWords)) return result("recipe_search", 0.6, "dietary vocabulary");
    return result("general_clarification", 0.5, "no rule matched");
}

json summarize(const json& in) {
    const auto& dishes = in.at("dishes");
    if (dishes.empty()) return {{"text", "No recipes matched the current constraints."}};
    std::vector<std::string> paragraphs;
    for (const auto& d : dishes) {
        std::vector<std::string> clauses;
        const auto attrs = d.value("attrs", std::vector<std::string>{});
        if (!attrs.empty()) clauses.push_back("has " + join(attrs, ", "));
        for (const auto& t : d.value("tags", std::vector<std::string>{})) clauses.push_back(t);
        std::string p = d.value("name", "");
        p += clauses.empty() ? " matches your request." : " " + join_list(clauses, "and") + ".";
        const auto satisfied = d.value("satisfied", std::vector<std::string>{});
        if (!satisfied.empty()) p += " It meets: " + join(satisfied, ", ") + ".";
        const auto unknown = d.value("unknown", std::vector<std::string>{});
        if (!unknown.empty()) p += " Borderline: " + join(unknown, "; ") + ".";
        paragraphs.push_back(std::move(p));
    }
    return {{"text", join(paragraphs, "\n\n")}};
}

// "isDairyFree" -> "dairy-free"
std::string flag_words(std::string_view flag) {
    if (flag.size() > 2 && flag.substr(0, 2) == "is") flag.remove_prefix(2);
    std::string out;
    for (std::size_t i = 0; i < flag.size(); ++i) {
        const auto c = static_cast<unsigned char>(flag[i]);
        if (i > 0 && std::isupper(c)) out.push_back('-');
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

json suggest(const json& in) {
    const auto refs = in.value("constraint_refs", std::vector<std::string>{});
    const auto dishes = in.value("dishes", std::vector<std::string>{});
    if (refs.empty() && dishes.empty()) {
        return {{"suggestions",
                 {"Find me a vegan lunch under 400 kcal", "Recommend some high-fiber recipes",
                  "What are healthy low-sodium dinner options?"}}};
    }
    std::string bound_key = "sodium";
    bool lower = true;
    std::string flag;
    for (const auto& r : refs) {
        if (r.rfind("bound:", 0) == 0 && bound_key == "sodium" && lower) {
            const auto rest = r.substr(6);
            const auto colon = rest.rfind(':');
            bound_key = rest.substr(0, colon);
            lower = rest.substr(colon + 1) == "max";
        } else if (r.rfind("flag:", 0) == 0 && flag.empty()) {
            flag = flag_words(r.substr(5));
        }
    }
    std::string first = "Show " + std::string(lower ? "lower-" : "higher-") + bound_key + " alternatives";
    if (!dishes.empty()) first += " to " + dishes.front();
    return {{"suggestions",
             {first, "What are the nutritional values of these recipes?",
              flag.empty() ? "Recommend some high-fiber recipes" : "Recommend more " + flag + " dinner ideas"}}};
}

std::string trim_phrase(std::string s) {
    static const std::regex article("^(the|a|an|some) ", std::regex::icase);
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    s = s.substr(b, e - b + 1);
    s = std::regex_replace(s, article, "");
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

json extract(const json& in) {
    struct Pattern {
        std::regex re;
        int subject;
        int object;
        const char* relation;
    };
    static const std::vector<Pattern> patterns = [] {
        const auto f = std::regex::icase | std::regex::ECMAScript;
        return std::vector<Pattern>{
            {std::regex(R"(^(.+?) (?:alleviates|neutralizes|removes|masks|reduces) (.+?) odou?rs?\b.*$)", f), 1, 2,
             "neutralizeOdor"},
            {std::regex(R"(^(.+?) is a (?:good |great )?(?:substitute|replacement) for (.+?)(?: in .*)?$)", f), 2, 1,
             "substitutableBy"},
            {std::regex(R"(^(.+?) (?:is recommended for|helps with|is good for) (.+?)(?: because .*| after .*)?$)",
                        f),
             1, 2, "recommendsFor"},
            {std::regex(R"(^(.+?) is (?:made|derived|produced) from (.+?)(?: and .*)?$)", f), 1, 2, "derivesFrom"},
            {std::regex(R"(^(.+?) contains (.+?)(?: and .*)?$)", f), 1, 2, "containsIngredient"},
        };
    }();
    json relations = json::array();
    const std::string text = in.value("text", "");
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find_first_of(".!?\n", start);
        if (end == std::string::npos) end = text.size();
        const auto sentence = trim_phrase(text.substr(start, end - start));
        start = end + 1;
        if (sentence.empty()) continue;
        for (const auto& p : patterns) {
            std::smatch m;
            if (std::regex_match(sentence, m, p.re)) {
                relations.push_back({{"subject", trim_phrase(m[p.subject].str())},
                                     {"relation", p.relation},
                                     {"object", trim_phrase(m[p.object].str())}});
                break;
            }
        }
    }
    return {{"relations", relations}};
}

json propose(const json& in) {
    const std::string term = in.value("term", "");
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& v : in.value("vocabulary", std::vector<std::string>{})) {
        std::size_t n = 0;
        while (n < term.size() && n < v.size() && term[n] == v[n]) ++n;
        if (n >= 4 && v != term) scored.emplace_back(n, v);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    json out = json::array();
    for (std::size_t i = 0; i < scored.size() && i < 3; ++i) out.push_back(scored[i].second);
    return {{"proposals", out}};
}

json clarify(const json& in) {
    const std::string term = in.value("term", "");
    const auto candidates = in.value("candidates", std::vector<std::string>{});
    if (term.empty()) return {{"question", "Could you tell me more about what you would like to eat?"}};
    if (candidates.empty()) return {{"question", "Could you say more about what you mean by '" + term + "'?"}};
    return {{"question", "Should we treat '" + term + "' as " + join_list(candidates, "or") + "?"}};
}

}  // namespace

nlohmann::json MockProvider::complete(const PromptEnvelope& envelope) {
    const auto& in = envelope.inputs;
    switch (envelope.task) {
        case Task::intent_classification: return classify(in);
        case Task::summary: return summarize(in);
        case Task::query_generation: return suggest(in);
        case Task::relation_extraction: return extract(in);
        case Task::synonym_proposal: return propose(in);
        case Task::clarification: return clarify(in);
    }
    throw Error(ErrorCode::provider_error, "unsupported task");
}

}  // namespace genie::llm
