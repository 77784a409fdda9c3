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


#include "genie/query/resources.hpp"

#include <algorithm>
#include <fstream>

#include "genie/error.hpp"
#include "genie/kg/csv.hpp"

namespace genie::query {

namespace {

// Rows after the header; rows shorter than `width` are an error.
std::vector<kg::CsvRow> read_rows(std::istream& in, std::size_t width, const std::string& what) {
    kg::CsvReader reader(in);
    std::vector<kg::CsvRow> rows;
    bool header = true;
    while (auto row = reader.next()) {
        if (header) {
            header = false;
            continue;
        }
        if (row->fields.size() < width) {
            throw Error(ErrorCode::malformed_row,
                        what + " line " + std::to_string(row->line) + ": expected " + std::to_string(width) + " fields");
        }
        rows.push_back(std::move(*row));
    }
    return rows;
}

}  // namespace

Entailments Entailments::from_csv(std::istream& in) {
    Entailments e;
    for (const auto& row : read_rows(in, 2, "entailments")) e.add(row.fields[0], row.fields[1]);
    return e;
}

void Entailments::add(const std::string& flag, const std::string& excluded_class) {
    auto& classes = table_[flag];
    if (std::find(classes.begin(), classes.end(), excluded_class) == classes.end()) {
        classes.push_back(excluded_class);
    }
}

const std::vector<std::string>& Entailments::classes_of(const std::string& flag) const {
    static const std::vector<std::string> none;
    auto it = table_.find(flag);
    return it == table_.end() ? none : it->second;
}

std::vector<std::string> Entailments::flags() const {
    std::vector<std::string> out;
    for (const auto& [f, _] : table_) out.push_back(f);
    return out;
}

std::optional<std::string> Entailments::flag_for_class(const std::string& cls) const {
    for (const auto& [f, classes] : table_) {
        if (classes.size() == 1 && classes.front() == cls) return f;
    }
    return std::nullopt;
}

std::vector<std::string> Entailments::classes() const {
    std::vector<std::string> out;
    for (const auto& [_, classes] : table_) out.insert(out.end(), classes.begin(), classes.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NutrientDefaults NutrientDefaults::from_csv(std::istream& in) {
    NutrientDefaults d;
    for (const auto& row : read_rows(in, 5, "nutrient defaults")) {
        const auto& f = row.fields;
        const auto where = "nutrient defaults line " + std::to_string(row.line);
        NutrientDefault entry;
        entry.nutrient = f[0];
        if (f[1] == "reduce") {
            entry.direction = GoalDirection::reduce;
        } else if (f[1] == "increase") {
            entry.direction = GoalDirection::increase;
        } else {
            throw Error(ErrorCode::malformed_row, where + ": direction must be reduce or increase");
        }
        const auto cmp = parse_comparator(f[2]);
        if (!cmp) throw Error(ErrorCode::malformed_row, where + ": bad comparator '" + f[2] + "'");
        const auto unit = kg::parse_unit(f[4]);
        if (!unit || *unit == kg::Unit::none) throw Error(ErrorCode::malformed_row, where + ": bad unit '" + f[4] + "'");
        try {
            entry.bound = Bound{*cmp, std::stod(f[3]), *unit};
        } catch (const std::exception&) {
            throw Error(ErrorCode::malformed_row, where + ": bad value '" + f[3] + "'");
        }
        d.set(std::move(entry));
    }
    return d;
}

void NutrientDefaults::set(NutrientDefault d) {
    for (auto& e : entries_) {
        if (e.nutrient == d.nutrient && e.direction == d.direction) {
            e = std::move(d);
            return;
        }
    }
    entries_.push_back(std::move(d));
}

std::optional<Bound> NutrientDefaults::lookup(const std::string& nutrient, GoalDirection direction) const {
    for (const auto& e : entries_) {
        if (e.nutrient == nutrient && e.direction == direction) return e.bound;
    }
    return std::nullopt;
}

std::optional<kg::Unit> NutrientDefaults::unit_of(const std::string& nutrient) const {
    for (const auto& e : entries_) {
        if (e.nutrient == nutrient) return e.bound.unit;
    }
    return std::nullopt;
}

ParserResources ParserResources::load(const std::filesystem::path& dir) {
    auto open = [&](const char* name, bool required) -> std::optional<std::ifstream> {
        const auto path = dir / name;
        std::ifstream in(path);
        if (!in) {
            if (required) throw Error(ErrorCode::config_error, "cannot open " + path.string());
            return std::nullopt;
        }
        return in;
    };
    ParserResources r;
    try {
        auto entailments = open("entailments.csv", true);
        r.entailments = Entailments::from_csv(*entailments);
        auto defaults = open("nutrient_defaults.csv", true);
        r.defaults = NutrientDefaults::from_csv(*defaults);
        if (auto in = open("lexicon.csv", false)) {
            for (const auto& row : read_rows(*in, 2, "lexicon")) {
                double weight = 1.0;
                if (row.fields.size() > 2 && !row.fields[2].empty()) weight = std::stod(row.fields[2]);
                r.lexicon.push_back({row.fields[0], row.fields[1], weight});
            }
        }
        if (auto in = open("synonyms.csv", false)) {
            for (const auto& row : read_rows(*in, 2, "synonyms")) r.synonyms[row.fields[0]] = row.fields[1];
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::config_error) throw;
        throw Error(ErrorCode::config_error, e.what());
    } catch (const std::exception& e) {
        throw Error(ErrorCode::config_error, std::string("parser resources: ") + e.what());
    }
    return r;
}

}  // namespace genie::query
