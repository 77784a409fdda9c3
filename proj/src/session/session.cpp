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


#include "genie/session/session.hpp"

#include <algorithm>
#include <chrono>

#include "genie/error.hpp"
#include "genie/query/conflicts.hpp"
#include "genie/query/intent.hpp"
#include "genie/query/parser.hpp"

namespace genie::session {

using query::IntentCategory;

Engine::Engine(std::shared_ptr<const kg::GraphSnapshot> snapshot, query::ParserResources resources,
               match::MatchConfig match_config, llm::Gateway gateway, SessionSettings settings)
    : snapshot_(std::move(snapshot)),
      resources_(std::move(resources)),
      lexicon_(query::Lexicon::build(*snapshot_, resources_)),
      matcher_(std::move(match_config), resources_.entailments),
      gateway_(std::move(gateway)),
      settings_(settings) {}

std::shared_ptr<const Engine> Engine::with_snapshot(std::shared_ptr<const kg::GraphSnapshot> snapshot) const {
    return std::make_shared<const Engine>(std::move(snapshot), resources_, matcher_.config(), gateway_, settings_);
}

namespace {

std::int64_t wall_clock() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

bool has_content(const ParsedTurn& p) {
    return std::any_of(p.constraints.begin(), p.constraints.end(),
                       [](const query::Constraint& c) { return c.kind != query::ConstraintKind::subjective; });
}

std::vector<query::Conflict> unresolved(const std::vector<query::Conflict>& all) {
    std::vector<query::Conflict> out;
    for (const auto& c : all) {
        if (c.status == query::ConflictStatus::unresolved) out.push_back(c);
    }
    return out;
}

}  // namespace

Session::Session(std::shared_ptr<const Engine> engine, SessionOptions options)
    : engine_(std::move(engine)), options_(std::move(options)) {
    if (!engine_) throw Error(ErrorCode::invalid_argument, "session needs an engine");
    if (!options_.clock) options_.clock = wall_clock;
}

InteractionAction Session::record(ActionKind kind, std::string target, ActionStatus status) {
    InteractionAction a{next_id_++, kind, std::move(target), options_.clock(), status};
    actions_.push_back(a);
    if (options_.log) *options_.log << to_json(a).dump() << '\n' << std::flush;
    return a;
}

InteractionAction* Session::find(std::uint64_t id) {
    for (auto& a : actions_) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

FoldContext Session::fold_context() const {
    return {&engine_->snapshot(), &engine_->resources().entailments, engine_->settings().repetition_threshold};
}

PreferenceProfile Session::profile() const { return fold_profile(actions_, parsed_, fold_context()); }

PreferenceProfile Session::prospective_profile() const {
    return fold_profile(actions_, parsed_, fold_context(), true);
}

std::vector<query::Conflict> Session::conflicts() const {
    return prospective_profile().active_constraints.conflicts;
}

std::vector<query::Constraint> Session::learn_repetition() const { return profile().proposals; }

std::optional<ParsedTurn> Session::try_parse(const std::string& message, const query::Intent& intent,
                                             std::uint64_t turn) const {
    query::ParseOptions opts;
    opts.gateway = &engine_->gateway();
    opts.turn = static_cast<int>(turn);
    try {
        auto set = query::parse_constraints(message, intent, engine_->snapshot(), engine_->lexicon(),
                                            engine_->resources(), opts);
        return ParsedTurn{std::move(set.constraints), std::move(set.pending_clarifications)};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::no_parsable_content) return std::nullopt;
        throw;
    }
}

Outcome Session::outcome() const {
    return {profile(), recommendation_.value_or(match::Recommendation{}), summary_, query_version_};
}

Outcome Session::recompute() {
    ++query_version_;
    const auto p = profile();
    match::RecommendRequest req;
    req.set = &p.active_constraints;
    req.learned = p.learned;
    req.detail_level = recommendation_ ? recommendation_->subgraph.detail_level : engine_->settings().default_detail;
    const auto& snap = engine_->snapshot();
    match::Recommendation rec;
    try {
        rec = recommendation_ ? engine_->matcher().adapt(*recommendation_, req, snap)
                              : engine_->matcher().recommend(req, snap);
        summary_ = llm::generate_summary(engine_->gateway(), rec.summary_payload);
    } catch (const match::NoCandidates& nc) {
        rec.diagnostics = nc.diagnostics();
        rec.snapshot_version = snap.version();
        rec.subgraph.detail_level = engine_->matcher().clamp_detail(req.detail_level);
        if (recommendation_) rec.subgraph = match::diff_views(recommendation_->subgraph, rec.subgraph);
        std::vector<std::string> hints;
        for (const auto& d : rec.diagnostics) {
            if (d.results > 0) {
                hints.push_back("Dropping '" + d.description + "' would allow " + std::to_string(d.results) +
                                (d.results == 1 ? " recipe." : " recipes."));
            }
        }
        summary_ = llm::kEmptySummary;
        if (!hints.empty()) summary_ += " " + join(hints, " ");
    }
    rec.query_version = query_version_;
    recommendation_ = std::move(rec);
    return {p, *recommendation_, summary_, query_version_};
}

std::string Session::conflict_note(const std::vector<query::Conflict>& open) const {
    if (open.empty()) return "";
    const auto p = prospective_profile();
    auto describe_sig = [&](const std::string& sig) {
        for (const auto& c : p.active_constraints.constraints) {
            if (query::signature(c) == sig) return query::describe(c, &engine_->snapshot());
        }
        return sig;
    };
    std::vector<std::string> parts;
    for (const auto& c : open) {
        parts.push_back("'" + describe_sig(c.first) + "' conflicts with '" + describe_sig(c.second) +
                        "'. Which one should I keep?");
    }
    return join(parts, " ");
}

TurnResponse Session::route_turn(const std::string& message) {
    query::TurnHistory th{messages_, recommendation_.has_value()};
    const auto intent = query::classify_intent(message, th, &engine_->gateway());
    messages_.push_back(message);
    const auto action = record(ActionKind::text_query, message, ActionStatus::applied);

    TurnResponse resp;
    resp.turn_id = action.id;
    resp.intent = intent;

    if (intent.category == IntentCategory::information_request && recommendation_ &&
        !recommendation_->results.empty()) {
        auto payload = engine_->matcher().summary_payload(recommendation_->results, profile().active_constraints,
                                                          engine_->snapshot(), true);
        payload.question = message;
        resp.reply = llm::generate_summary(engine_->gateway(), payload);
        resp.query_version = query_version_;
        return resp;
    }

    auto parsed = try_parse(message, intent, action.id);
    if (!query::constraint_bearing(intent.category) && parsed && !has_content(*parsed)) {
        // Nothing to search on: ask about the first open term.
        parsed_[action.id] = *parsed;
        resp.clarifications = parsed->clarifications;
        const auto& g = engine_->gateway();
        resp.reply = parsed->clarifications.empty()
                         ? llm::clarification_question(g, "", {})
                         : llm::clarification_question(g, parsed->clarifications.front().term,
                                                       parsed->clarifications.front().candidates);
        resp.query_version = query_version_;
        return resp;
    }
    if (!parsed) {
        resp.reply = llm::clarification_question(engine_->gateway(), "", {});
        resp.query_version = query_version_;
        return resp;
    }

    parsed_[action.id] = *parsed;
    const auto out = recompute();
    resp.recommendation = out.recommendation;
    resp.clarifications = parsed->clarifications;
    resp.conflicts = unresolved(out.profile.active_constraints.conflicts);
    resp.query_version = out.query_version;
    std::vector<std::string> parts{out.summary};
    if (const auto note = conflict_note(resp.conflicts); !note.empty()) parts.push_back(note);
    for (const auto& c : resp.clarifications) {
        parts.push_back(llm::clarification_question(engine_->gateway(), c.term, c.candidates));
    }
    resp.reply = join(parts, "\n\n");
    return resp;
}

StageResult Session::stage_action(ActionKind kind, const std::string& node_id) {
    if (kind != ActionKind::include_node && kind != ActionKind::exclude_node) {
        throw Error(ErrorCode::invalid_argument, "only include_node and exclude_node can be staged");
    }
    engine_->snapshot().node(node_id);
    for (const auto& a : actions_) {
        if (a.status == ActionStatus::staged && a.kind == kind && a.target == node_id) return {a, true};
    }
    return {record(kind, node_id, ActionStatus::staged), false};
}

Outcome Session::apply(std::optional<std::uint64_t> expected_version) {
    if (expected_version && *expected_version != query_version_) {
        throw Error(ErrorCode::stale_version, "query version is " + std::to_string(query_version_) + ", not " +
                                                  std::to_string(*expected_version));
    }
    std::vector<std::string> ids;
    for (const auto& a : actions_) {
        if (a.status == ActionStatus::staged) ids.push_back(std::to_string(a.id));
    }
    if (ids.empty()) throw Error(ErrorCode::no_staged_actions, "nothing is staged");
    const auto open = unresolved(conflicts());
    if (!open.empty()) {
        std::vector<std::string> names;
        for (const auto& c : open) names.push_back(c.id());
        throw Error(ErrorCode::unresolved_conflict, "resolve first: " + join(names, ", "));
    }
    for (auto& a : actions_) {
        if (a.status == ActionStatus::staged) a.status = ActionStatus::applied;
    }
    record(ActionKind::apply, join(ids, ","), ActionStatus::applied);
    return recompute();
}

Outcome Session::undo(std::uint64_t action_id) {
    auto* a = find(action_id);
    if (!a || a->kind == ActionKind::undo) {
        throw Error(ErrorCode::unknown_action, "no undoable action " + std::to_string(action_id));
    }
    if (a->status == ActionStatus::undone) {
        throw Error(ErrorCode::already_undone, "action " + std::to_string(action_id) + " is already undone");
    }
    const bool was_staged = a->status == ActionStatus::staged;
    a->status = ActionStatus::undone;
    if (a->kind == ActionKind::apply) {
        std::size_t pos = 0;
        const auto target = a->target;
        while (pos < target.size()) {
            auto comma = target.find(',', pos);
            if (comma == std::string::npos) comma = target.size();
            if (auto* b = find(std::stoull(target.substr(pos, comma - pos)))) {
                if (b->status == ActionStatus::applied) b->status = ActionStatus::undone;
            }
            pos = comma + 1;
        }
    }
    record(ActionKind::undo, std::to_string(action_id), ActionStatus::applied);
    if (was_staged) return outcome();
    return recompute();
}

Outcome Session::resolve_conflict(const std::string& conflict_id, const std::string& keep) {
    const auto all = conflicts();
    const auto it = std::find_if(all.begin(), all.end(), [&](const query::Conflict& c) { return c.id() == conflict_id; });
    if (it == all.end()) throw Error(ErrorCode::unknown_conflict, "no conflict " + conflict_id);
    if (it->status == query::ConflictStatus::resolved) {
        throw Error(ErrorCode::unknown_conflict, "conflict " + conflict_id + " is already resolved");
    }
    if (keep != it->first && keep != it->second) {
        throw Error(ErrorCode::invalid_argument, "'" + keep + "' is not a side of " + conflict_id);
    }
    record(ActionKind::clarification_answer, resolve_answer(conflict_id, keep), ActionStatus::applied);
    return recompute();
}

Outcome Session::confirm_learned(const std::string& counter_key) {
    const auto proposals = learn_repetition();
    const bool known = std::any_of(proposals.begin(), proposals.end(),
                                   [&](const query::Constraint& c) { return c.cites == counter_key; });
    if (!known) throw Error(ErrorCode::invalid_argument, "no learned proposal for " + counter_key);
    record(ActionKind::clarification_answer, confirm_answer(counter_key), ActionStatus::applied);
    return recompute();
}

kg::SubgraphView Session::graph(int detail_level) const {
    if (!recommendation_) throw Error(ErrorCode::no_recommendation_yet, "no recommendation yet");
    return engine_->matcher().view(*recommendation_, engine_->snapshot(), detail_level);
}

std::vector<std::string> Session::suggested_queries() const {
    llm::QueryContext ctx;
    for (const auto& c : profile().active_constraints.effective()) ctx.constraint_refs.push_back(c.ref());
    if (recommendation_) {
        for (const auto& r : recommendation_->results) ctx.dishes.push_back(engine_->snapshot().node(r.recipe).label);
    }
    ctx.turns = static_cast<int>(messages_.size());
    return llm::generate_queries(engine_->gateway(), ctx);
}

}  // namespace genie::session
