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

#include "genie/match/matcher.hpp"

namespace genie::match {

namespace {

// "320 kcal" for calories, "12 g protein" / "420 mg sodium" otherwise.
std::string attr_text(const std::string& key, const kg::Quantity& q) {
    const auto text = kg::format_quantity(kg::normalize(q));
    return key == "calories" ? text : text + " " + key;
}

}  // namespace

llm::SummaryPayload Matcher::summary_payload(const std::vector<MatchResult>& results,
                                             const query::ConstraintSet& set, const kg::GraphSnapshot& snapshot,
                                             bool all_attributes) const {
    const auto effective = set.effective();
    std::vector<std::string> keys = {"calories"};
    for (const auto& c : effective) {
        if (c.kind == query::ConstraintKind::bound && std::find(keys.begin(), keys.end(), c.key) == keys.end()) {
            keys.push_back(c.key);
        }
    }

    llm::SummaryPayload payload;
    for (const auto& r : results) {
        const auto& node = snapshot.node(r.recipe);
        const auto facts = recipe_facts(snapshot, r.recipe);
        llm::DishFacts d;
        d.id = r.recipe;
        d.name = node.label;
        d.status = std::string(to_string(r.status));

        auto shown = keys;
        if (all_attributes) {
            for (const auto& [k, _] : node.numeric_attrs) {
                if (std::find(shown.begin(), shown.end(), k) == shown.end()) shown.push_back(k);
            }
        }
        for (const auto& k : shown) {
            if (auto it = node.numeric_attrs.find(k); it != node.numeric_attrs.end()) {
                d.attrs.push_back(attr_text(k, it->second));
            }
        }

        for (const auto& c : effective) {
            const auto ref = c.ref();
            if (std::find(r.satisfied.begin(), r.satisfied.end(), ref) == r.satisfied.end()) continue;
            auto text = query::describe(c, &snapshot);
            if (std::find(r.substitutions.begin(), r.substitutions.end(), ref) != r.substitutions.end()) {
                text += " (through a substitute)";
            }
            d.satisfied.push_back(std::move(text));
        }
        for (const auto& m : r.violated_or_unknown) d.unknown.push_back(m.detail + " is unknown");

        if (facts.unknown_class.empty()) {
            for (const auto& tag : config_.exclusion_tags) {
                if (!facts.classes.contains(tag)) d.tags.push_back("excludes " + tag);
            }
        }
        for (const auto& [nutrient, _] : config_.bands) {
            auto it = node.numeric_attrs.find(nutrient);
            if (it == node.numeric_attrs.end()) continue;
            const auto label = band_label(config_, nutrient, kg::normalize(it->second).value);
            if (!label.empty()) d.tags.push_back("is " + label + " in " + nutrient);
        }
        payload.dishes.push_back(std::move(d));
    }
    return payload;
}

}  // namespace genie::match
