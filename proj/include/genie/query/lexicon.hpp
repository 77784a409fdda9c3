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
#include <unordered_map>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "genie/query/resources.hpp"

namespace genie::query {

enum class TokenKind { word, number, punct };

struct Token {
    std::string text;  // lowercased
    std::string norm;  // lowercased and singular
    std::size_t begin = 0;
    std::size_t end = 0;
    TokenKind kind = TokenKind::word;
};

// Plural stripping only ("tomatoes" -> "tomato", "berries" -> "berry").
std::string singularize(std::string_view word);
std::vector<Token> tokenize(std::string_view text);
// Space-joined normalized words of `text`.
std::string normalize(std::string_view text);

enum class TargetType { node, flag, category };

struct LexTarget {
    TargetType type = TargetType::node;
    std::string value;  // node id, flag name or categorical class
    kg::NodeKind kind = kg::NodeKind::ingredient;
    std::string attr_key;  // nutrient nodes: attribute their bounds apply to
    double weight = 1.0;
    std::optional<std::string> substituted_from;  // alias that led here

    bool operator==(const LexTarget&) const = default;
};

// Surface forms known for one snapshot: node labels, lexicon.csv rows,
// flag and class names, and synonym aliases, in that order of precedence.
class Lexicon {
public:
    static Lexicon build(const kg::GraphSnapshot& snapshot, const ParserResources& resources);

    // Exact lookup of a whole surface form (normalized first).
    const LexTarget* lookup(std::string_view surface) const;
    // Longest entry starting at token `i`; returns it with its token length.
    std::optional<std::pair<LexTarget, std::size_t>> match(const std::vector<Token>& tokens, std::size_t i) const;
    // Normalized surfaces that point at nodes without substitution, sorted.
    std::vector<std::string> node_surfaces() const;
    std::uint64_t snapshot_version() const { return version_; }

private:
    void add(const std::string& surface, LexTarget target);

    std::unordered_map<std::string, LexTarget> entries_;
    std::size_t max_tokens_ = 1;
    std::uint64_t version_ = 0;
};

}  // namespace genie::query
