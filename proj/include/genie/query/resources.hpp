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

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genie/query/constraint.hpp"

namespace genie::query {

// Dietary flag -> categorical classes it forbids (entailments.csv).
class Entailments {
public:
    static Entailments from_csv(std::istream& in);

    void add(const std::string& flag, const std::string& excluded_class);
    // Empty for an unknown flag.
    const std::vector<std::string>& classes_of(const std::string& flag) const;
    std::vector<std::string> flags() const;
    // The flag whose entailment set is exactly {cls}, if any ("dairy" -> isDairyFree).
    std::optional<std::string> flag_for_class(const std::string& cls) const;
    std::vector<std::string> classes() const;

private:
    std::map<std::string, std::vector<std::string>> table_;
};

enum class GoalDirection { reduce, increase };

struct NutrientDefault {
    std::string nutrient;
    GoalDirection direction = GoalDirection::reduce;
    Bound bound;
};

// Caps used for direction-only goals such as "reduce protein".
class NutrientDefaults {
public:
    // Header nutrient,direction,comparator,value,unit.
    static NutrientDefaults from_csv(std::istream& in);

    void set(NutrientDefault d);
    std::optional<Bound> lookup(const std::string& nutrient, GoalDirection direction) const;
    // Unit used when a threshold names the nutrient but no unit.
    std::optional<kg::Unit> unit_of(const std::string& nutrient) const;
    const std::vector<NutrientDefault>& all() const { return entries_; }

private:
    std::vector<NutrientDefault> entries_;
};

struct LexiconEntry {
    std::string surface;
    std::string node_id;
    double weight = 1.0;
};

struct ParserResources {
    Entailments entailments;
    NutrientDefaults defaults;
    std::vector<LexiconEntry> lexicon;            // lexicon.csv
    std::map<std::string, std::string> synonyms;  // alias -> canonical surface

    // Reads entailments.csv and nutrient_defaults.csv (required) plus
    // lexicon.csv and synonyms.csv (optional) from `dir`.
    // Throws Error(config_error) for a missing or malformed file.
    static ParserResources load(const std::filesystem::path& dir);
};

}  // namespace genie::query
