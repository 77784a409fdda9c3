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

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genie::match {

struct Weights {
    double satisfied = 0.5;
    double affinity = 0.25;
    double borderline = 0.15;
    double tightness = 0.10;
};

// Qualitative label for a nutrient amount: the first band whose minimum the
// value reaches, highest minimum first.
struct Band {
    double min = 0.0;  // grams, or kcal for calories
    std::string label;
};

struct MatchConfig {
    Weights weights;
    int top_n = 5;
    int max_detail = 5;
    int max_hops = 3;
    int nodes_per_level = 10;
    std::vector<std::string> exclusion_tags = {"dairy"};
    std::map<std::string, std::vector<Band>> bands = {
        {"protein", {{15, "high"}, {10, "moderately high"}, {5, "moderate"}, {0, "low"}}}};

    static MatchConfig defaults() { return {}; }
};

// Throws Error(config_error) naming the offending key.
void validate(const MatchConfig& config);

// {hop budget, node budget} for a detail level (already clamped).
std::pair<int, int> detail_budgets(const MatchConfig& config, int detail_level);

// "moderately high", or empty when no band applies.
std::string band_label(const MatchConfig& config, const std::string& nutrient, double grams);

}  // namespace genie::match
