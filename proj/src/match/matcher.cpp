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
#include <unordered_set>

#include "genie/match/matcher.hpp"

namespace genie::match {

using query::ConstraintKind;

NoCandidates::NoCandidates(std::vector<Relaxation> diagnostics)
    : Error(ErrorCode::no_candidates, "no recipe satisfies the current constraints"),
      diagnostics_(std::move(diagnostics)) {}

Matcher::Matcher(MatchConfig config, query::Entailments entailments)
    : config_(std::move(config)), entailments_(std::move(entailments)) {
    validate(config_);
}

int Matcher::clamp_detail(int detail_level) const { return std::clamp(detail_level, 1, config_.max_detail); }

namespace {

std::vector<std::string> blocked_nodes(const query::ConstraintSet& set, const kg::GraphSnapshot& snapshot) {
    std::vector<std::string> out;
    for (const auto& c : set.effective()) {
        if (c.kind == ConstraintKind::exclude_entity && snapshot.contains(c.key)) out.push_back(c.key);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Relaxation> Matcher::leave_one_out(const query::ConstraintSet& set,
                                               const kg::GraphSnapshot& snapshot) const {
    std::vector<Relaxation> out;
    for (std::size_t i = 0; i < set.constraints.size(); ++i) {
        const auto& c = set.constraints[i];
        if (!query::filter_effective(c)) continue;
        auto relaxed = set;
        relaxed.constraints.erase(relaxed.constraints.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back({c.ref(), query::describe(c, &snapshot),
                       candidate_retrieval(relaxed, snapshot, entailments_, true).size()});
    }
    return out;
}

Recommendation Matcher::recommend(const RecommendRequest& request, const kg::GraphSnapshot& snapshot) const {
    static const query::ConstraintSet empty;
    const auto& set = request.set ? *request.set : empty;
    const auto effective = set.effective();

    std::vector<MatchResult> results;
    for (const auto& facts : all_recipe_facts(snapshot)) {
        auto r = match_recipe(effective, facts, snapshot, entailments_, true);
        if (!r) continue;
        r->score = score(*r, facts, set, request.learned, snapshot, config_);
        results.push_back(std::move(*r));
    }
    if (results.empty()) throw NoCandidates(leave_one_out(set, snapshot));

    std::sort(results.begin(), results.end(), [](const MatchResult& a, const MatchResult& b) {
        return a.score != b.score ? a.score > b.score : a.recipe < b.recipe;
    });
    if (results.size() > static_cast<std::size_t>(config_.top_n)) results.resize(config_.top_n);

    Recommendation rec;
    rec.results = std::move(results);
    rec.snapshot_version = snapshot.version();
    rec.blocked = blocked_nodes(set, snapshot);
    for (const auto& c : effective) {
        if (c.kind == ConstraintKind::include_entity) rec.subgraph.highlights.push_back(c.key);
    }
    rec.subgraph = view(rec, snapshot, request.detail_level);
    rec.summary_payload = summary_payload(rec.results, set, snapshot, request.all_attributes);
    return rec;
}

kg::SubgraphView Matcher::view(const Recommendation& rec, const kg::GraphSnapshot& snapshot, int detail_level) const {
    kg::SubgraphView v;
    const int level = clamp_detail(detail_level);
    if (!rec.results.empty()) {
        std::vector<std::string> seeds;
        for (const auto& r : rec.results) seeds.push_back(r.recipe);
        const auto [hops, nodes] = detail_budgets(config_, level);
        const std::unordered_set<std::string> blocked(rec.blocked.begin(), rec.blocked.end());
        v = kg::extract_subgraph(snapshot, seeds, hops, nodes, blocked);
    }
    v.detail_level = level;
    std::unordered_set<std::string> present(v.nodes.begin(), v.nodes.end());
    for (const auto& r : rec.results) v.highlights.push_back(r.recipe);
    for (const auto& h : rec.subgraph.highlights) {
        if (present.contains(h) &&
            std::find(v.highlights.begin(), v.highlights.end(), h) == v.highlights.end()) {
            v.highlights.push_back(h);
        }
    }
    return v;
}

Recommendation Matcher::adapt(const Recommendation& prev, const RecommendRequest& request,
                              const kg::GraphSnapshot& snapshot) const {
    auto next = recommend(request, snapshot);
    next.subgraph = diff_views(prev.subgraph, std::move(next.subgraph));
    return next;
}

kg::SubgraphView diff_views(const kg::SubgraphView& prev, kg::SubgraphView next) {
    const std::unordered_set<std::string> before(prev.nodes.begin(), prev.nodes.end());
    const std::unordered_set<std::string> after(next.nodes.begin(), next.nodes.end());
    next.diff.clear();
    std::unordered_set<std::string> added;
    for (const auto& n : next.nodes) {
        const bool kept = before.contains(n);
        next.diff[n] = kept ? kg::DiffMarker::kept : kg::DiffMarker::added;
        if (!kept) added.insert(n);
    }
    std::unordered_set<std::string> removed;
    for (const auto& n : prev.nodes) {
        if (after.contains(n)) continue;
        next.nodes.push_back(n);
        next.diff[n] = kg::DiffMarker::removed_fading;
        removed.insert(n);
    }
    for (const auto& e : prev.edges) {
        if (!removed.contains(e.subject) && !removed.contains(e.object)) continue;
        if (added.contains(e.subject) || added.contains(e.object)) continue;
        next.edges.push_back(e);
    }
    std::sort(next.edges.begin(), next.edges.end());
    next.edges.erase(std::unique(next.edges.begin(), next.edges.end()), next.edges.end());
    return next;
}

}  // namespace genie::match
