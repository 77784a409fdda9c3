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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genie/kg/snapshot.hpp"
#include "genie/kg/subgraph.hpp"
#include "genie/error.hpp"
#include "genie/llm/tasks.hpp"
#include "genie/match/config.hpp"
#include "genie/query/constraint.hpp"
#include "genie/query/resources.hpp"

namespace genie::match {

// What a recipe is made of, precomputed once per evaluation.
struct RecipeFacts {
    std::string id;
    std::vector<std::string> closure;  // composition closure, sorted
    std::set<std::string> reach;       // recipe, closure, cuisine and condition targets
    std::set<std::string> classes;     // categorical values over recipe and closure
    // Closure nodes whose class cannot be established: no categorical
    // attributes and no containsIngredient breakdown.
    std::vector<std::string> unknown_class;
};

RecipeFacts recipe_facts(const kg::GraphSnapshot& snapshot, const std::string& recipe);
std::vector<RecipeFacts> all_recipe_facts(const kg::GraphSnapshot& snapshot);

enum class Verdict { satisfied, violated, unknown };

struct Check {
    Verdict verdict = Verdict::satisfied;
    bool substitution = false;     // include satisfied through substitutableBy
    std::string via;               // the substitute node
    double margin = 0.0;           // bounds: relative distance from the limit, in [0,1]
    std::string detail;            // unknown: the missing attribute or unclassified node
};

Check evaluate(const query::Constraint& c, const RecipeFacts& recipe, const kg::GraphSnapshot& snapshot,
               const query::Entailments& entailments);

enum class MatchStatus { full, borderline };
std::string_view to_string(MatchStatus s);

struct Miss {
    std::string ref;
    std::string reason;  // "violated" or "attribute_missing"
    std::string detail;

    bool operator==(const Miss&) const = default;
};

struct MatchResult {
    std::string recipe;
    MatchStatus status = MatchStatus::full;
    std::vector<std::string> satisfied;  // refs
    std::vector<Miss> violated_or_unknown;
    std::vector<std::string> substitutions;  // include refs met through a substitute
    double score = 0.0;

    bool operator==(const MatchResult&) const = default;
};

// Checks one recipe against already filtered constraints. std::nullopt when
// one is violated, or cannot be checked and `lenient` is false.
std::optional<MatchResult> match_recipe(const std::vector<query::Constraint>& effective, const RecipeFacts& recipe,
                                        const kg::GraphSnapshot& snapshot, const query::Entailments& entailments,
                                        bool lenient);

// Recipes passing every filter-effective constraint. With `lenient`,
// constraints that cannot be checked (missing attribute, unclassified
// ingredient) do not reject. Sorted by id.
std::vector<std::string> candidate_retrieval(const query::ConstraintSet& set, const kg::GraphSnapshot& snapshot,
                                             const query::Entailments& entailments, bool lenient = false);

struct Partition {
    std::vector<MatchResult> full;
    std::vector<MatchResult> borderline;
};

Partition partition_borderline(const std::vector<std::string>& candidates, const query::ConstraintSet& set,
                               const kg::GraphSnapshot& snapshot, const query::Entailments& entailments);

// Score in [0,1]; see MatchConfig::weights. `learned` holds confirmed
// learned demotions.
double score(const MatchResult& result, const RecipeFacts& recipe, const query::ConstraintSet& set,
             const std::vector<query::Constraint>& learned, const kg::GraphSnapshot& snapshot,
             const MatchConfig& config);

struct Relaxation {
    std::string ref;
    std::string description;
    std::size_t results = 0;  // candidates if this constraint alone were dropped

    bool operator==(const Relaxation&) const = default;
};

class NoCandidates : public Error {
public:
    explicit NoCandidates(std::vector<Relaxation> diagnostics);
    const std::vector<Relaxation>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Relaxation> diagnostics_;
};

struct Recommendation {
    std::vector<MatchResult> results;
    kg::SubgraphView subgraph;
    llm::SummaryPayload summary_payload;
    std::uint64_t query_version = 0;
    std::uint64_t snapshot_version = 0;
    std::vector<std::string> blocked;  // excluded node ids kept out of the view
    std::vector<Relaxation> diagnostics;  // set when nothing matched

    bool operator==(const Recommendation&) const = default;
};

struct RecommendRequest {
    const query::ConstraintSet* set = nullptr;
    std::vector<query::Constraint> learned;
    int detail_level = 1;
    bool all_attributes = false;  // summary lists every numeric attribute
};

class Matcher {
public:
    Matcher(MatchConfig config, query::Entailments entailments);

    // Throws NoCandidates with leave-one-out diagnostics when nothing
    // survives retrieval. Detail levels above max_detail are clamped.
    Recommendation recommend(const RecommendRequest& request, const kg::GraphSnapshot& snapshot) const;

    // recommend() plus diff markers against `prev`.
    Recommendation adapt(const Recommendation& prev, const RecommendRequest& request,
                         const kg::GraphSnapshot& snapshot) const;

    // The same recommendation viewed at another detail level; no re-ranking.
    kg::SubgraphView view(const Recommendation& rec, const kg::GraphSnapshot& snapshot, int detail_level) const;

    std::vector<Relaxation> leave_one_out(const query::ConstraintSet& set, const kg::GraphSnapshot& snapshot) const;

    llm::SummaryPayload summary_payload(const std::vector<MatchResult>& results, const query::ConstraintSet& set,
                                        const kg::GraphSnapshot& snapshot, bool all_attributes) const;

    int clamp_detail(int detail_level) const;
    const MatchConfig& config() const { return config_; }
    const query::Entailments& entailments() const { return entailments_; }

private:
    MatchConfig config_;
    query::Entailments entailments_;
};

// Marks nodes of `next` against `prev`: kept, added, or removed-fading.
// Removed nodes are appended with their previous edges, minus any edge
// touching an added node.
kg::SubgraphView diff_views(const kg::SubgraphView& prev, kg::SubgraphView next);

}  // namespace genie::match
