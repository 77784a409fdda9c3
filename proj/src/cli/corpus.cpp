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
#include <sstream>

#include "genie/cli/cli.hpp"

namespace genie::cli {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

std::string to_dot(const kg::SubgraphView& view, const kg::GraphSnapshot& snapshot) {
    std::ostringstream out;
    out << "digraph recommendation {\n";
    for (const auto& id : view.nodes) {
        const auto* n = snapshot.find(id);
        out << "  " << quoted(id) << " [label=" << quoted(n ? n->label : id);
        if (n) out << ", kind=" << quoted(std::string(kg::to_string(n->kind)));
        if (const auto it = view.diff.find(id); it != view.diff.end()) {
            if (it->second == kg::DiffMarker::removed_fading) out << ", style=dashed";
            if (it->second == kg::DiffMarker::added) out << ", style=bold";
        }
        if (std::find(view.highlights.begin(), view.highlights.end(), id) != view.highlights.end()) {
            out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (const auto& e : view.edges) {
        out << "  " << quoted(e.subject) << " -> " << quoted(e.object) << " [label=" << quoted(e.relation) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::optional<std::string> resolve_surface(const query::Lexicon& lexicon, const kg::GraphSnapshot& snapshot,
                                           const std::string& surface) {
    if (const auto* t = lexicon.lookup(surface); t && t->type == query::TargetType::node) return t->value;
    const auto want = lower(surface);
    for (const auto* n : snapshot.nodes()) {
        if (lower(n->label) == want || lower(n->id) == want) return n->id;
    }
    return std::nullopt;
}

}  // namespace genie::cli
