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

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genie::kg {

struct CsvRow {
    std::size_t line = 0;  // 1-based line where the record starts
    std::vector<std::string> fields;
};

// RFC 4180 reader. Unquoted fields are trimmed; quoted fields keep their
// content verbatim and may span lines.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Returns std::nullopt at end of input. Blank lines are skipped.
    // Throws Error(malformed_row) on an unterminated quote.
    std::optional<CsvRow> next();

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace genie::kg
