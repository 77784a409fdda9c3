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


#include "genie/match/config.hpp"

#include <algorithm>
#include <cmath>

#include "genie/error.hpp"

namespace genie::match {

void validate(const MatchConfig& c) {
    auto fail = [](const std::string& key, const std::string& why) {
        throw Error(ErrorCode::config_error, "matcher." + key + ": " + why);
    };
    const std::pair<const char*, double> weights[] = {{"weights.satisfied", c.weights.satisfied},
                                                      {"weights.affinity", c.weights.affinity},
                                                      {"weights.borderline", c.weights.borderline},
                                                      {"weights.tightness", c.weights.tightness}};
    double total = 0;
    for (const auto& [key, w] : weights) {
        if (!std::isfinite(w) || w < 0) fail(key, "must be a finite number >= 0");
        total += w;
    }
    if (total <= 0) fail("weights", "must not all be zero");
    if (c.top_n < 1) fail("top_n", "must be >= 1");
    if (c.max_detail < 1) fail("max_detail", "must be >= 1");
    if (c.max_hops < 1) fail("max_hops", "must be >= 1");
    if (c.nodes_per_level < 1) fail("nodes_per_level", "must be >= 1");
    for (const auto& [nutrient, bands] : c.bands) {
        for (const auto& b : bands) {
            if (!std::isfinite(b.min) || b.label.empty()) fail("bands." + nutrient, "needs a finite min and a label");
        }
    }
}

std::pair<int, int> detail_budgets(const MatchConfig& config, int detail_level) {
    return {std::min(detail_level, config.max_hops), config.nodes_per_level * detail_level};
}

std::string band_label(const MatchConfig& config, const std::string& nutrient, double grams) {
    auto it = config.bands.find(nutrient);
    if (it == config.bands.end()) return "";
    auto bands = it->second;
    std::sort(bands.begin(), bands.end(), [](const Band& a, const Band& b) { return a.min > b.min; });
    for (const auto& b : bands) {
        if (grams >= b.min) return b.label;
    }
    return "";
}

}  // namespace genie::match
