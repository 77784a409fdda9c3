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


#include "genie/query/parser.hpp"

#include <algorithm>
#include <set>

#include "genie/error.hpp"
#include "genie/llm/tasks.hpp"
#include "genie/query/conflicts.hpp"
#include "genie/query/intent.hpp"
#include "genie/query/keywords.hpp"
#include "genie/query/resolve.hpp"

namespace genie::query {

namespace {

const std::set<std::string> kNegation = {"no",     "not",      "without", "avoid",  "dislike", "hate",
                                         "exclude", "remove",  "skip",    "don't",  "dont",    "doesn't",
                                         "never",  "allergic", "except",  "minus",  "drop",    "eliminate",
                                         "can't",  "cannot",   "won't",   "nothing"};
const std::set<std::string> kInclusion = {"want",    "like",   "love",    "include", "add",   "with",
                                          "use",     "prefer", "have",    "containing", "contain",
                                          "enjoy",   "need",   "craving", "featuring"};
const std::set<std::string> kReduce = {"reduce", "lower", "less",     "low",   "cut",    "limit",
                                       "decrease", "minimize", "fewer", "lighter", "light"};
const std::set<std::string> kIncrease = {"increase", "more",  "high", "boost", "rich",
                                         "raise",    "higher", "extra", "plenty"};
const std::set<std::string> kRetain = {"retain", "preserve", "keep", "maintain"};
const std::set<std::string> kLowOil = {"low", "less", "little", "minimal", "reduced", "no", "without"};
const std::set<std::string> kSubjective = {"tasty", "delicious", "yummy", "flavorful", "appetizing"};
const std::set<std::string> kClauseBreak = {"but", "however", "although", "though"};
const std::set<std::string> kStop = {
    "i",     "me",    "my",     "a",      "an",     "the",    "some",   "any",    "to",      "of",
    "for",   "it",    "them",   "that",   "this",   "these",  "those",  "please", "also",    "too",
    "very",  "really", "much",  "eat",    "eating", "cook",   "cooking", "make",  "try",     "get",
    "be",    "is",    "are",    "and",    "or",     "in",     "on",     "at",     "so",      "just",
    "food",  "foods", "recipe", "recipes", "dish",  "dishes", "meal",   "meals",  "lunch",   "dinner",
    "breakfast", "snack", "something", "anything", "would", "i'd", "i'm", "we", "you", "your",
    "our",   "all",   "any",    "other",  "can",    "could",  "should", "will",   "today",   "tonight",
    "ideas", "idea",  "options", "option", "stuff", "much",  "many",   "lot",    "lots",    "better",
    "using", "used",  "in",     "from",   "into",   "as",     "well",   "again",  "anymore", "there",
    "what",  "which", "how",    "why",    "when",   "where",  "who",    "do",     "does",    "did",
    "show",  "find",  "recommend", "suggest", "give", "related", "plan", "intake", "instead", "alternative",
    "alternatives", "more", "less", "same", "similar", "new", "one", "ones", "something", "either"};

const std::vector<std::string> kSubjectiveReadings = {"sweet", "savory", "high in umami"};

bool is_word(const Token& t) { return t.kind == TokenKind::word; }

kg::Unit unit_for(const std::string& nutrient, kg::Unit given, const ParserResources& resources) {
    if (given != kg::Unit::none) return given;
    if (auto u = resources.defaults.unit_of(nutrient)) return *u;
    return nutrient == "calories" ? kg::Unit::kcal : kg::Unit::g;
}

bool unit_fits(const std::string& nutrient, kg::Unit unit) {
    return (nutrient == "calories") == (unit == kg::Unit::kcal);
}

class ClauseParser {
public:
    ClauseParser(std::string_view message, const Lexicon& lexicon, const ParserResources& resources,
                 const ParseOptions& options)
        : message_(message), lexicon_(lexicon), resources_(resources), options_(options),
          tokens_(tokenize(message)) {
        for (std::size_t k = 0; const auto& kw : extract_keywords(message, tokens_, lexicon)) {
            keyword_at_.emplace(kw.first_token, k++);
            keywords_.push_back(kw);
        }
    }

    ConstraintSet run() {
        std::size_t i = 0;
        while (i < tokens_.size()) i = step(i);
        return std::move(out_);
    }

private:
    void reset() {
        negate_ = false;
        include_cue_ = false;
        cue_adjacent_ = false;
        retain_seen_ = false;
        direction_.reset();
    }

    void add(Constraint c) {
        c.turn = options_.turn;
        for (const auto& existing : out_.constraints) {
            if (signature(existing) == signature(c)) return;
        }
        out_.constraints.push_back(std::move(c));
    }

    void clarify(Clarification c) {
        if (std::find(out_.pending_clarifications.begin(), out_.pending_clarifications.end(), c) ==
            out_.pending_clarifications.end()) {
            out_.pending_clarifications.push_back(std::move(c));
        }
    }

    std::size_t step(std::size_t i) {
        const auto& t = tokens_[i];
        if (t.kind == TokenKind::punct || kClauseBreak.contains(t.text)) {
            reset();
            return i + 1;
        }
        if (auto it = keyword_at_.find(i); it != keyword_at_.end()) {
            const auto& kw = keywords_[it->second];
            on_keyword(kw);
            cue_adjacent_ = false;
            return kw.last_token;
        }
        if (t.text == "instead" && i + 1 < tokens_.size() && tokens_[i + 1].text == "of") {
            negate_ = true;
            cue_adjacent_ = true;
            return i + 2;
        }
        if (t.norm == "oil" && i > 0 && kLowOil.contains(tokens_[i - 1].text)) {
            add(make_method_flag("lowOilCooking"));
            negate_ = false;
            cue_adjacent_ = false;
            return i + 1;
        }
        if (kRetain.contains(t.text)) retain_seen_ = true;
        if ((t.norm == "nutrient" || t.norm == "nutrition" || t.norm == "vitamin") && retain_seen_) {
            add(make_method_flag("highRetainNutrients"));
            cue_adjacent_ = false;
            return i + 1;
        }
        if (kSubjective.contains(t.text)) {
            add(make_subjective(t.text));
            clarify({t.text, kSubjectiveReadings, "subjective"});
            cue_adjacent_ = false;
            return i + 1;
        }
        bool cue = false;
        if (kNegation.contains(t.text)) {
            negate_ = true;
            cue = true;
        }
        if (kInclusion.contains(t.text)) {
            include_cue_ = true;
            cue = true;
        }
        if (kReduce.contains(t.text)) {
            direction_ = GoalDirection::reduce;
            cue = true;
        }
        if (kIncrease.contains(t.text)) {
            direction_ = GoalDirection::increase;
            cue = true;
        }
        if (cue) {
            cue_adjacent_ = kNegation.contains(t.text) || kInclusion.contains(t.text) || cue_adjacent_;
            return i + 1;
        }
        if (kStop.contains(t.text) || kStop.contains(t.norm) || !is_word(t)) return i + 1;
        if (cue_adjacent_ && (negate_ || include_cue_)) return unknown_mention(i);
        return i + 1;
    }

    // Up to three consecutive unmatched content words after a cue.
    std::size_t unknown_mention(std::size_t i) {
        std::size_t j = i;
        while (j < tokens_.size() && j < i + 3 && is_word(tokens_[j]) && !keyword_at_.contains(j) &&
               !kStop.contains(tokens_[j].text) && !kNegation.contains(tokens_[j].text) &&
               !kInclusion.contains(tokens_[j].text) && !kClauseBreak.contains(tokens_[j].text)) {
            ++j;
        }
        std::string surface;
        for (auto k = i; k < j; ++k) surface += (surface.empty() ? "" : " ") + tokens_[k].norm;
        const auto r = resolve_entity(surface, lexicon_, options_.gateway);
        auto c = negate_ ? make_exclude(surface) : make_include(surface);
        c.unresolved = true;
        Clarification q{surface, {}, "unresolved"};
        if (r.kind == ResolutionKind::substitute && r.source == SubstituteSource::llm) {
            q.candidates = r.proposals;
            q.reason = "synonym_proposal";
        }
        add(std::move(c));
        clarify(std::move(q));
        negate_ = false;
        cue_adjacent_ = false;
        return j;
    }

    void on_keyword(const Keyword& kw) {
        if (kw.threshold) {
            const auto& th = *kw.threshold;
            if (th.nutrient) {
                const auto unit = unit_for(*th.nutrient, th.unit, resources_);
                if (unit_fits(*th.nutrient, unit)) add(make_bound(*th.nutrient, th.comparator, th.value, unit));
            }
            return;
        }
        const auto& target = *kw.target;
        const bool negated = negate_;
        negate_ = false;
        switch (target.type) {
            case TargetType::flag: add(make_flag(target.value, !negated)); return;
            case TargetType::category:
                if (negated) {
                    if (auto flag = resources_.entailments.flag_for_class(target.value)) add(make_flag(*flag));
                }
                return;
            case TargetType::node: break;
        }
        Constraint c;
        switch (target.kind) {
            case kg::NodeKind::nutrient: {
                auto dir = negated ? std::optional(GoalDirection::reduce) : direction_;
                if (!dir) return;
                auto b = resources_.defaults.lookup(target.attr_key, *dir);
                if (!b) return;
                add(make_bound(target.attr_key, b->comparator, b->value, b->unit));
                return;
            }
            case kg::NodeKind::ingredient:
            case kg::NodeKind::condition:
            case kg::NodeKind::cuisine: c = negated ? make_exclude(target.value) : make_include(target.value); break;
            case kg::NodeKind::recipe:
                if (negated) {
                    c = make_exclude(target.value);
                } else if (include_cue_) {
                    c = make_include(target.value);
                } else {
                    return;
                }
                break;
            default: return;
        }
        c.substituted_from = target.substituted_from;
        add(std::move(c));
    }

    std::string_view message_;
    const Lexicon& lexicon_;
    const ParserResources& resources_;
    const ParseOptions& options_;
    std::vector<Token> tokens_;
    std::vector<Keyword> keywords_;
    std::map<std::size_t, std::size_t> keyword_at_;
    ConstraintSet out_;

    bool negate_ = false;
    bool include_cue_ = false;
    bool cue_adjacent_ = false;
    bool retain_seen_ = false;
    std::optional<GoalDirection> direction_;
};

}  // namespace

const std::vector<std::string>& subjective_readings() { return kSubjectiveReadings; }

ConstraintSet parse_constraints(std::string_view message, const Intent& intent, const kg::GraphSnapshot& snapshot,
                                const Lexicon& lexicon, const ParserResources& resources,
                                const ParseOptions& options) {
    auto set = ClauseParser(message, lexicon, resources, options).run();
    if (set.empty() && constraint_bearing(intent.category)) {
        throw Error(ErrorCode::no_parsable_content, "no constraint or known mention in: " + std::string(message));
    }
    return detect_conflicts(std::move(set), snapshot, resources.entailments);
}

}  // namespace genie::query
