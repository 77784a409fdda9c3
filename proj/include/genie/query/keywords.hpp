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


#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genie/query/constraint.hpp"
#include "genie/query/lexicon.hpp"

namespace genie::query {

struct NumericThreshold {
    std::optional<std::string> nutrient;  // attribute key, when named or implied by the unit
    Comparator comparator = Comparator::lt;
    double value = 0.0;
    kg::Unit unit = kg::Unit::none;

    bool operator==(const NumericThreshold&) const = default;
};

struct Keyword {
    std::string mention;  // message text covered
    std::size_t begin = 0;  // byte span in the message
    std::size_t end = 0;
    std::size_t first_token = 0;  // token span [first_token, last_token)
    std::size_t last_token = 0;
    std::optional<LexTarget> target;
    std::optional<NumericThreshold> threshold;

    bool operator==(const Keyword&) const = default;
};

// Numbers as digits or the words zero..nineteen.
std::optional<double> parse_number(const Token& token);

// Threshold starting at token `i`, with the number of tokens it covers.
// Recognized shapes: "under 300 calories", "less than 10 grams of sugar",
// "sodium below 500 mg", "400 kcal or less".
std::optional<std::pair<NumericThreshold, std::size_t>> match_threshold(const std::vector<Token>& tokens,
                                                                        std::size_t i, const Lexicon* lexicon);

// Lexicon mentions (longest match first) and numeric thresholds, in message
// order. A mention inside a threshold is folded into it.
std::vector<Keyword> extract_keywords(std::string_view message, const Lexicon& lexicon);
std::vector<Keyword> extract_keywords(std::string_view message, const std::vector<Token>& tokens,
                                      const Lexicon& lexicon);

}  // namespace genie::query
