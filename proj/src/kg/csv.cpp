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


#include "genie/kg/csv.hpp"

#include "genie/error.hpp"

namespace genie::kg {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<CsvRow> CsvReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (trim(line).empty()) continue;

        CsvRow row;
        row.line = line_;
        std::string field;
        bool quoted = false;     // inside quotes
        bool was_quoted = false; // current field started with a quote
        std::size_t i = 0;
        for (;;) {
            if (i == line.size()) {
                if (quoted) {
                    // Embedded newline inside a quoted field.
                    std::string more;
                    if (!std::getline(in_, more)) {
                        throw Error(ErrorCode::malformed_row,
                                    "line " + std::to_string(row.line) + ": unterminated quote");
                    }
                    ++line_;
                    field.push_back('\n');
                    line = std::move(more);
                    i = 0;
                    continue;
                }
                break;
            }
            const char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.push_back('"');
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field.push_back(c);
                }
            } else if (c == '"' && trim(field).empty()) {
                field.clear();
                quoted = true;
                was_quoted = true;
            } else if (c == ',') {
                row.fields.push_back(was_quoted ? field : std::string(trim(field)));
                field.clear();
                was_quoted = false;
            } else {
                field.push_back(c);
            }
            ++i;
        }
        row.fields.push_back(was_quoted ? field : std::string(trim(field)));
        return row;
    }
    return std::nullopt;
}

std::string csv_escape(std::string_view field) {
    const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos ||
                              (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

}  // namespace genie::kg
