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


#include "genie/query/lexicon.hpp"

#include <algorithm>
#include <cctype>

namespace genie::query {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// "isDairyFree" -> "dairy free", "animalDerived" -> "animal derived"
std::string split_camel(std::string_view name) {
    if (name.size() > 2 && name.substr(0, 2) == "is" && std::isupper(static_cast<unsigned char>(name[2]))) {
        name.remove_prefix(2);
    }
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (i > 0 && std::isupper(static_cast<unsigned char>(name[i]))) out.push_back(' ');
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(name[i]))));
    }
    return out;
}

LexTarget named_target(TargetType type, std::string value) {
    LexTarget t;
    t.type = type;
    t.value = std::move(value);
    return t;
}

}  // namespace

std::string singularize(std::string_view word) {
    std::string w(word);
    if (w.size() <= 3 || !std::all_of(w.begin(), w.end(), is_alpha)) return w;
    if (ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "ie")) return w.substr(0, w.size() - 2) + "y";
    if (ends_with(w, "oes") || ends_with(w, "sses") || ends_with(w, "ches") || ends_with(w, "shes") ||
        ends_with(w, "xes")) {
        return w.substr(0, w.size() - 2);
    }
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
    if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
    return w;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    auto push = [&](std::size_t b, std::size_t e, TokenKind kind, std::string t) {
        Token tok;
        tok.norm = kind == TokenKind::word ? singularize(t) : t;
        tok.text = std::move(t);
        tok.begin = b;
        tok.end = e;
        tok.kind = kind;
        out.push_back(std::move(tok));
    };
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_alpha(c)) {
            const auto b = i;
            std::string w;
            while (i < text.size()) {
                if (is_alpha(text[i])) {
                    w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
                    ++i;
                } else if (text[i] == '\'' && i + 1 < text.size() && is_alpha(text[i + 1])) {
                    w.push_back('\'');
                    ++i;
                } else if (text.substr(i, 3) == "\xE2\x80\x99" && i + 3 < text.size() && is_alpha(text[i + 3])) {
                    w.push_back('\'');
                    i += 3;
                } else {
                    break;
                }
            }
            if (ends_with(w, "'s")) w.resize(w.size() - 2);
            push(b, i, TokenKind::word, std::move(w));
        } else if (is_digit(c)) {
            const auto b = i;
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
                ++i;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            push(b, i, TokenKind::number, std::string(text.substr(b, i - b)));
        } else if (c == '<' || c == '>') {
            const bool eq = i + 1 < text.size() && text[i + 1] == '=';
            push(i, i + (eq ? 2 : 1), TokenKind::word, std::string(1, c) + (eq ? "=" : ""));
            i += eq ? 2 : 1;
        } else if (text.substr(i, 3) == "\xE2\x89\xA4" || text.substr(i, 3) == "\xE2\x89\xA5") {
            push(i, i + 3, TokenKind::word, text[i + 2] == '\xA4' ? "<=" : ">=");
            i += 3;
        } else if (c == '.' || c == ',' || c == ';' || c == '!' || c == '?' || c == ':' || c == '(' || c == ')') {
            push(i, i + 1, TokenKind::punct, std::string(1, c));
            ++i;
        } else {
            ++i;
        }
    }
    return out;
}

std::string normalize(std::string_view text) {
    std::string out;
    for (const auto& t : tokenize(text)) {
        if (t.kind == TokenKind::punct) continue;
        if (!out.empty()) out.push_back(' ');
        out += t.norm;
    }
    return out;
}

void Lexicon::add(const std::string& surface, LexTarget target) {
    const auto key = normalize(surface);
    if (key.empty() || entries_.contains(key)) return;
    max_tokens_ = std::max<std::size_t>(max_tokens_, std::count(key.begin(), key.end(), ' ') + 1);
    entries_.emplace(key, std::move(target));
}

Lexicon Lexicon::build(const kg::GraphSnapshot& snapshot, const ParserResources& resources) {
    Lexicon lex;
    lex.version_ = snapshot.version();
    auto node_target = [&](const kg::EntityNode& n, double weight) {
        LexTarget t;
        t.type = TargetType::node;
        t.value = n.id;
        t.kind = n.kind;
        t.weight = weight;
        if (n.kind == kg::NodeKind::nutrient) {
            auto it = n.categorical_attrs.find("attrKey");
            t.attr_key = it != n.categorical_attrs.end() ? it->second : lower(n.id);
        }
        return t;
    };

    for (const auto* n : snapshot.nodes()) lex.add(n->label, node_target(*n, 1.0));

    auto rows = resources.lexicon;
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
    for (const auto& row : rows) {
        if (const auto* n = snapshot.find(row.node_id)) lex.add(row.surface, node_target(*n, row.weight));
    }

    for (const auto& flag : resources.entailments.flags()) {
        lex.add(split_camel(flag), named_target(TargetType::flag, flag));
    }
    for (const auto& cls : resources.entailments.classes()) {
        lex.add(split_camel(cls), named_target(TargetType::category, cls));
    }

    for (const auto& [alias, canonical] : resources.synonyms) {
        const auto* target = lex.lookup(canonical);
        if (!target) continue;
        auto t = *target;
        t.substituted_from = alias;
        lex.add(alias, std::move(t));
    }
    return lex;
}

const LexTarget* Lexicon::lookup(std::string_view surface) const {
    auto it = entries_.find(normalize(surface));
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::pair<LexTarget, std::size_t>> Lexicon::match(const std::vector<Token>& tokens,
                                                                std::size_t i) const {
    const auto limit = std::min(max_tokens_, tokens.size() - std::min(i, tokens.size()));
    for (std::size_t len = limit; len >= 1; --len) {
        std::string key;
        bool ok = true;
        for (std::size_t k = i; k < i + len; ++k) {
            if (tokens[k].kind == TokenKind::punct) {
                ok = false;
                break;
            }
            if (!key.empty()) key.push_back(' ');
            key += tokens[k].norm;
        }
        if (!ok) continue;
        if (auto it = entries_.find(key); it != entries_.end()) return std::make_pair(it->second, len);
    }
    return std::nullopt;
}

std::vector<std::string> Lexicon::node_surfaces() const {
    std::vector<std::string> out;
    for (const auto& [k, t] : entries_) {
        if (t.type == TargetType::node && !t.substituted_from) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace genie::query
