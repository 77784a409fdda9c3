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


#include "genie/query/conflicts.hpp"

#include <algorithm>

#include "genie/kg/closure.hpp"

namespace genie::query {

std::string signature(const Constraint& c) {
    switch (c.kind) {
        case ConstraintKind::flag:
        case ConstraintKind::method_flag: return c.ref() + (c.flag_value ? "=true" : "=false");
        case ConstraintKind::bound:
            if (!c.bound) return c.ref();
            return c.ref() + "=" + std::string(to_string(c.bound->comparator)) + kg::format_number(c.bound->value) +
                   (c.bound->unit == kg::Unit::none ? "" : std::string(kg::to_string(c.bound->unit)));
        default: return c.ref();
    }
}

namespace {

bool candidate(const Constraint& c) {
    return c.status == ConstraintStatus::active && !c.unresolved && c.kind != ConstraintKind::subjective &&
           c.origin != Origin::learned;
}

bool infeasible(const Bound& lower, const Bound& upper) {
    const double lo = kg::normalize({lower.value, lower.unit}).value;
    const double hi = kg::normalize({upper.value, upper.unit}).value;
    if (lo > hi) return true;
    return lo == hi && (lower.comparator == Comparator::gt || upper.comparator == Comparator::lt);
}

bool flag_forbids(const Constraint& flag, const std::string& node, const kg::GraphSnapshot& snapshot,
                  const Entailments& entailments) {
    if (!flag.flag_value || !snapshot.contains(node)) return false;
    const auto& forbidden = entailments.classes_of(flag.key);
    if (forbidden.empty()) return false;
    auto ids = kg::contains_closure(snapshot, node);
    ids.push_back(node);
    const auto values = kg::categorical_values(snapshot, ids);
    return std::any_of(forbidden.begin(), forbidden.end(), [&](const auto& cls) { return values.contains(cls); });
}

}  // namespace

bool contradicts(const Constraint& a, const Constraint& b, const kg::GraphSnapshot& snapshot,
                 const Entailments& entailments) {
    if (a.ref() == b.ref()) return signature(a) != signature(b);
    using K = ConstraintKind;
    if ((a.kind == K::include_entity && b.kind == K::exclude_entity) ||
        (a.kind == K::exclude_entity && b.kind == K::include_entity)) {
        return a.key == b.key;
    }
    if (a.kind == K::bound && b.kind == K::bound && a.key == b.key && a.bound && b.bound) {
        const bool a_upper = is_upper(a.bound->comparator);
        if (a_upper == is_upper(b.bound->comparator)) return false;
        return a_upper ? infeasible(*b.bound, *a.bound) : infeasible(*a.bound, *b.bound);
    }
    if (a.kind == K::flag && b.kind == K::include_entity) return flag_forbids(a, b.key, snapshot, entailments);
    if (b.kind == K::flag && a.kind == K::include_entity) return flag_forbids(b, a.key, snapshot, entailments);
    return false;
}

ConstraintSet detect_conflicts(ConstraintSet set, const kg::GraphSnapshot& snapshot, const Entailments& entailments) {
    std::vector<Conflict> out;
    for (const auto& c : set.conflicts) {
        if (c.status == ConflictStatus::resolved) out.push_back(c);
    }
    auto known = [&](const std::string& id) {
        return std::any_of(out.begin(), out.end(), [&](const Conflict& c) { return c.id() == id; });
    };
    const auto& cs = set.constraints;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!candidate(cs[i])) continue;
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (!candidate(cs[j]) || !contradicts(cs[i], cs[j], snapshot, entailments)) continue;
            auto a = signature(cs[i]);
            auto b = signature(cs[j]);
            if (b < a) std::swap(a, b);
            Conflict c{a, b, ConflictStatus::unresolved, std::nullopt};
            if (!known(c.id())) out.push_back(std::move(c));
        }
    }
    set.conflicts = std::move(out);
    return set;
}

}  // namespace genie::query
