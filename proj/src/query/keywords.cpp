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


#include "genie/query/keywords.hpp"

#include <array>
#include <charconv>

namespace genie::query {

namespace {

struct Phrase {
    std::array<std::string_view, 3> words;
    Comparator comparator;
};

// Longest phrases first so "no more than" wins over "more than".
const std::vector<Phrase>& comparator_phrases() {
    static const std::vector<Phrase> phrases = {
        {{"no", "more", "than"}, Comparator::le},  {{"not", "more", "than"}, Comparator::le},
        {{"no", "less", "than"}, Comparator::ge},  {{"not", "less", "than"}, Comparator::ge},
        {{"less", "than"}, Comparator::lt},        {{"fewer", "than"}, Comparator::lt},
        {{"lower", "than"}, Comparator::lt},       {{"at", "most"}, Comparator::le},
        {{"up", "to"}, Comparator::le},            {{"more", "than"}, Comparator::gt},
        {{"greater", "than"}, Comparator::gt},     {{"higher", "than"}, Comparator::gt},
        {{"at", "least"}, Comparator::ge},         {{"under"}, Comparator::lt},
        {{"below"}, Comparator::lt},               {{"maximum"}, Comparator::le},
        {{"max"}, Comparator::le},                 {{"over"}, Comparator::gt},
        {{"above"}, Comparator::gt},               {{"exceeding"}, Comparator::gt},
        {{"minimum"}, Comparator::ge},             {{"min"}, Comparator::ge},
        {{"<"}, Comparator::lt},                   {{"<="}, Comparator::le},
        {{">"}, Comparator::gt},                   {{">="}, Comparator::ge},
    };
    return phrases;
}

std::optional<std::pair<Comparator, std::size_t>> match_comparator(const std::vector<Token>& tokens, std::size_t i) {
    for (const auto& p : comparator_phrases()) {
        std::size_t n = 0;
        while (n < p.words.size() && !p.words[n].empty()) ++n;
        if (i + n > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = tokens[i + k].text == p.words[k];
        if (ok) return std::make_pair(p.comparator, n);
    }
    return std::nullopt;
}

std::optional<kg::Unit> match_unit(const Token& t) {
    const auto& w = t.norm;
    if (w == "kcal" || w == "calory" || w == "cal" || w == "kilocalory") return kg::Unit::kcal;
    if (w == "g" || w == "gram" || w == "gr") return kg::Unit::g;
    if (w == "mg" || w == "milligram") return kg::Unit::mg;
    return std::nullopt;
}

// A nutrient mention at `i`: {attribute key, token length}.
std::optional<std::pair<std::string, std::size_t>> match_nutrient(const std::vector<Token>& tokens, std::size_t i,
                                                                  const Lexicon* lexicon) {
    if (!lexicon || i >= tokens.size()) return std::nullopt;
    auto m = lexicon->match(tokens, i);
    if (!m || m->first.type != TargetType::node || m->first.kind != kg::NodeKind::nutrient) return std::nullopt;
    return std::make_pair(m->first.attr_key, m->second);
}

std::optional<kg::Unit> implied_nutrient_unit(kg::Unit unit, std::optional<std::string>& nutrient) {
    if (unit == kg::Unit::kcal && !nutrient) nutrient = "calories";
    return unit;
}

bool is_filler(const Token& t) {
    return t.text == "intake" || t.text == "content" || t.text == "level" || t.text == "levels" ||
           t.text == "is" || t.text == "are" || t.text == "be" || t.text == "of" || t.text == "at" ||
           t.text == "should" || t.text == "stay" || t.text == "per" || t.text == "serving";
}

}  // namespace

std::optional<double> parse_number(const Token& token) {
    if (token.kind == TokenKind::number) {
        double v = 0;
        const auto* b = token.text.data();
        auto [p, ec] = std::from_chars(b, b + token.text.size(), v);
        if (ec == std::errc() && p == b + token.text.size()) return v;
        return std::nullopt;
    }
    static const std::array<std::string_view, 20> words = {
        "zero",   "one",    "two",     "three",   "four",     "five",    "six",
        "seven",  "eight",  "nine",    "ten",     "eleven",   "twelve",  "thirteen",
        "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (token.text == words[k]) return static_cast<double>(k);
    }
    return std::nullopt;
}

std::optional<std::pair<NumericThreshold, std::size_t>> match_threshold(const std::vector<Token>& tokens,
                                                                        std::size_t i, const Lexicon* lexicon) {
    auto at = [&](std::size_t k) -> const Token* { return k < tokens.size() ? &tokens[k] : nullptr; };

    // COMP NUM [UNIT] [of] [NUTRIENT]
    auto comparator_first = [&](std::size_t j) -> std::optional<std::pair<NumericThreshold, std::size_t>> {
        auto cmp = match_comparator(tokens, j);
        if (!cmp) return std::nullopt;
        auto k = j + cmp->second;
        const auto* num = at(k);
        if (!num) return std::nullopt;
        auto value = parse_number(*num);
        if (!value) return std::nullopt;
        ++k;
        NumericThreshold t{std::nullopt, cmp->first, *value, kg::Unit::none};
        if (const auto* u = at(k); u && match_unit(*u)) {
            t.unit = *match_unit(*u);
            ++k;
        }
        auto after = k;
        if (const auto* of = at(after); of && of->text == "of") ++after;
        if (auto n = match_nutrient(tokens, after, lexicon)) {
            t.nutrient = n->first;
            k = after + n->second;
        }
        implied_nutrient_unit(t.unit, t.nutrient);
        return std::make_pair(t, k - j);
    };

    if (auto r = comparator_first(i)) return r;

    // NUTRIENT [filler...] COMP NUM [UNIT]
    if (auto n = match_nutrient(tokens, i, lexicon)) {
        auto k = i + n->second;
        while (at(k) && is_filler(*at(k)) && k < i + n->second + 3) ++k;
        if (auto r = comparator_first(k); r && !r->first.nutrient) {
            r->first.nutrient = n->first;
            return std::make_pair(r->first, k - i + r->second);
        } else if (r && r->first.nutrient == n->first) {
            return std::make_pair(r->first, k - i + r->second);
        }
    }

    // NUM UNIT [of NUTRIENT] or less|fewer|more
    if (const auto* num = at(i); num && parse_number(*num)) {
        auto k = i + 1;
        const auto* u = at(k);
        if (!u || !match_unit(*u)) return std::nullopt;
        NumericThreshold t{std::nullopt, Comparator::le, *parse_number(*num), *match_unit(*u)};
        ++k;
        if (const auto* of = at(k); of && of->text == "of") {
            if (auto n = match_nutrient(tokens, k + 1, lexicon)) {
                t.nutrient = n->first;
                k += 1 + n->second;
            }
        }
        const auto* o = at(k);
        const auto* dir = at(k + 1);
        if (!o || !dir || o->text != "or") return std::nullopt;
        if (dir->text == "less" || dir->text == "fewer" || dir->text == "under" || dir->text == "below") {
            t.comparator = Comparator::le;
        } else if (dir->text == "more" || dir->text == "above" || dir->text == "over") {
            t.comparator = Comparator::ge;
        } else {
            return std::nullopt;
        }
        implied_nutrient_unit(t.unit, t.nutrient);
        return std::make_pair(t, k + 2 - i);
    }
    return std::nullopt;
}

std::vector<Keyword> extract_keywords(std::string_view message, const std::vector<Token>& tokens,
                                      const Lexicon& lexicon) {
    std::vector<Keyword> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        Keyword kw;
        std::size_t len = 0;
        if (auto t = match_threshold(tokens, i, &lexicon)) {
            kw.threshold = t->first;
            len = t->second;
        } else if (auto m = lexicon.match(tokens, i)) {
            kw.target = m->first;
            len = m->second;
        }
        if (len == 0) {
            ++i;
            continue;
        }
        kw.first_token = i;
        kw.last_token = i + len;
        kw.begin = tokens[i].begin;
        kw.end = tokens[i + len - 1].end;
        kw.mention = std::string(message.substr(kw.begin, kw.end - kw.begin));
        out.push_back(std::move(kw));
        i += len;
    }
    return out;
}

std::vector<Keyword> extract_keywords(std::string_view message, const Lexicon& lexicon) {
    return extract_keywords(message, tokenize(message), lexicon);
}

}  // namespace genie::query
