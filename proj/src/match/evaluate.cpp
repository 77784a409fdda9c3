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
#include <cmath>

#include "genie/kg/closure.hpp"
#include "genie/match/matcher.hpp"

namespace genie::match {

using query::Constraint;
using query::ConstraintKind;

std::string_view to_string(MatchStatus s) { return s == MatchStatus::full ? "full" : "borderline"; }

RecipeFacts recipe_facts(const kg::GraphSnapshot& snapshot, const std::string& recipe) {
    RecipeFacts f;
    f.id = recipe;
    f.closure = kg::contains_closure(snapshot, recipe);
    f.reach.insert(recipe);
    f.reach.insert(f.closure.begin(), f.closure.end());
    for (const auto& n : snapshot.neighbors(recipe)) {
        if (n.relation == kg::rel::belongs_to_cuisine || n.relation == kg::rel::recommends_for) f.reach.insert(n.id);
    }
    auto ids = f.closure;
    ids.push_back(recipe);
    f.classes = kg::categorical_values(snapshot, ids);
    for (const auto& id : f.closure) {
        const auto& node = snapshot.node(id);
        if (!node.categorical_attrs.empty()) continue;
        const auto parts = snapshot.neighbors(id);
        const bool broken_down = std::any_of(parts.begin(), parts.end(), [](const kg::Neighbor& n) {
            return n.relation == kg::rel::contains_ingredient || n.relation == kg::rel::derives_from;
        });
        if (!broken_down) f.unknown_class.push_back(id);
    }
    return f;
}

std::vector<RecipeFacts> all_recipe_facts(const kg::GraphSnapshot& snapshot) {
    std::vector<RecipeFacts> out;
    for (const auto& id : snapshot.ids_of_kind(kg::NodeKind::recipe)) out.push_back(recipe_facts(snapshot, id));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

Check evaluate(const Constraint& c, const RecipeFacts& recipe, const kg::GraphSnapshot& snapshot,
               const query::Entailments& entailments) {
    Check out;
    const auto& node = snapshot.node(recipe.id);
    switch (c.kind) {
        case ConstraintKind::flag: {
            if (!c.flag_value) return out;
            for (const auto& cls : entailments.classes_of(c.key)) {
                if (recipe.classes.contains(cls)) {
                    out.verdict = Verdict::violated;
                    out.detail = cls;
                    return out;
                }
            }
            if (!recipe.unknown_class.empty() && !entailments.classes_of(c.key).empty()) {
                out.verdict = Verdict::unknown;
                out.detail = "class of " + snapshot.node(recipe.unknown_class.front()).label;
            }
            return out;
        }
        case ConstraintKind::bound: {
            auto it = node.numeric_attrs.find(c.key);
            if (it == node.numeric_attrs.end() || !c.bound) {
                out.verdict = Verdict::unknown;
                out.detail = c.key;
                return out;
            }
            const double v = kg::normalize(it->second).value;
            const double b = kg::normalize({c.bound->value, c.bound->unit}).value;
            if (!query::compare(v, c.bound->comparator, b)) {
                out.verdict = Verdict::violated;
                return out;
            }
            out.margin = b > 0 ? std::min(1.0, std::abs(v - b) / b) : (v == b ? 0.0 : 1.0);
            return out;
        }
        case ConstraintKind::include_entity: {
            if (recipe.reach.contains(c.key)) return out;
            if (snapshot.contains(c.key)) {
                for (const auto& s : snapshot.neighbors(c.key, kg::rel::substitutable_by)) {
                    if (recipe.reach.contains(s.id)) {
                        out.substitution = true;
                        out.via = s.id;
                        return out;
                    }
                }
            }
            out.verdict = Verdict::violated;
            return out;
        }
        case ConstraintKind::exclude_entity:
            if (recipe.reach.contains(c.key)) out.verdict = Verdict::violated;
            return out;
        case ConstraintKind::method_flag: {
            auto it = node.categorical_attrs.find(c.key);
            if (it == node.categorical_attrs.end()) {
                out.verdict = Verdict::unknown;
                out.detail = c.key;
            } else if ((it->second == "true") != c.flag_value) {
                out.verdict = Verdict::violated;
            }
            return out;
        }
        case ConstraintKind::subjective: return out;
    }
    return out;
}

std::optional<MatchResult> match_recipe(const std::vector<Constraint>& effective, const RecipeFacts& recipe,
                                     const kg::GraphSnapshot& snapshot, const query::Entailments& entailments,
                                     bool lenient) {
    MatchResult r;
    r.recipe = recipe.id;
    for (const auto& c : effective) {
        const auto check = evaluate(c, recipe, snapshot, entailments);
        switch (check.verdict) {
            case Verdict::violated: return std::nullopt;
            case Verdict::unknown:
                if (!lenient) return std::nullopt;
                r.violated_or_unknown.push_back({c.ref(), "attribute_missing", check.detail});
                break;
            case Verdict::satisfied:
                r.satisfied.push_back(c.ref());
                if (check.substitution) r.substitutions.push_back(c.ref());
                break;
        }
    }
    r.status = r.violated_or_unknown.empty() ? MatchStatus::full : MatchStatus::borderline;
    return r;
}

std::vector<std::string> candidate_retrieval(const query::ConstraintSet& set, const kg::GraphSnapshot& snapshot,
                                             const query::Entailments& entailments, bool lenient) {
    const auto effective = set.effective();
    std::vector<std::string> out;
    for (const auto& f : all_recipe_facts(snapshot)) {
        if (match_recipe(effective, f, snapshot, entailments, lenient)) out.push_back(f.id);
    }
    return out;
}

Partition partition_borderline(const std::vector<std::string>& candidates, const query::ConstraintSet& set,
                               const kg::GraphSnapshot& snapshot, const query::Entailments& entailments) {
    const auto effective = set.effective();
    Partition p;
    for (const auto& id : candidates) {
        auto r = match_recipe(effective, recipe_facts(snapshot, id), snapshot, entailments, true);
        if (!r) continue;
        (r->status == MatchStatus::full ? p.full : p.borderline).push_back(std::move(*r));
    }
    return p;
}

double score(const MatchResult& result, const RecipeFacts& recipe, const query::ConstraintSet& set,
             const std::vector<Constraint>& learned, const kg::GraphSnapshot& snapshot, const MatchConfig& config) {
    const auto effective = set.effective();
    auto substituted = [&](const std::string& ref) {
        return std::find(result.substitutions.begin(), result.substitutions.end(), ref) != result.substitutions.end();
    };

    double exact = 0;
    double includes = 0;
    double include_hits = 0;
    double margin_sum = 0;
    double bounds = 0;
    for (const auto& c : effective) {
        const auto ref = c.ref();
        const bool ok = std::find(result.satisfied.begin(), result.satisfied.end(), ref) != result.satisfied.end();
        if (ok && !substituted(ref)) exact += 1;
        if (c.kind == ConstraintKind::include_entity) {
            includes += 1;
            if (ok) include_hits += substituted(ref) ? 0.5 : 1.0;
        }
        if (c.kind == ConstraintKind::bound && ok) {
            bounds += 1;
            margin_sum += evaluate(c, recipe, snapshot, query::Entailments{}).margin;
        }
    }
    const double sat = effective.empty() ? 1.0 : exact / static_cast<double>(effective.size());

    double dislikes = 0;
    for (const auto& l : learned) {
        const bool is_class = l.cites.rfind("class:", 0) == 0;
        if (is_class ? recipe.classes.contains(l.key) : recipe.reach.contains(l.key)) dislikes += 1;
    }
    const double inc_ratio = includes > 0 ? include_hits / includes : 0.0;
    const double dislike_ratio = learned.empty() ? 0.0 : dislikes / static_cast<double>(learned.size());
    const double affinity = std::clamp(0.5 + 0.5 * inc_ratio - 0.5 * dislike_ratio, 0.0, 1.0);
    const double penalty = result.status == MatchStatus::borderline ? 1.0 : 0.0;
    const double tightness = bounds > 0 ? margin_sum / bounds : 0.0;

    const auto& w = config.weights;
    const double raw = w.satisfied * sat + w.affinity * affinity - w.borderline * penalty + w.tightness * tightness;
    const double total = w.satisfied + w.affinity + w.borderline + w.tightness;
    return std::clamp((raw + w.borderline) / total, 0.0, 1.0);
}

}  // namespace genie::match
