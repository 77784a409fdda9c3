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

#include <ostream>
#include <string>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "genie/kg/subgraph.hpp"
#include "genie/query/lexicon.hpp"

namespace genie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitConfig = 2;

// Graphviz rendering of a view: one node per id labelled with its label,
// edges labelled with the relation; removed nodes dashed, added nodes bold.
std::string to_dot(const kg::SubgraphView& view, const kg::GraphSnapshot& snapshot);

// Maps a surface form to a node id through the lexicon, then through a
// case-insensitive label match.
std::optional<std::string> resolve_surface(const query::Lexicon& lexicon, const kg::GraphSnapshot& snapshot,
                                           const std::string& surface);

// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genie::cli
