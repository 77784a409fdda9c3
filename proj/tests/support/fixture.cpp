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


#include "fixture.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "genie/kg/loader.hpp"

namespace genie::test {

const std::string& fixture_dir() {
    static const std::string dir = GENIE_FIXTURE_DIR;
    return dir;
}

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

std::shared_ptr<const kg::GraphSnapshot> fixture_snapshot() {
    static const auto snap = [] {
        std::ifstream rel(fixture_path("relations.csv"));
        std::ifstream t(fixture_path("triples.csv"));
        std::ifstream a(fixture_path("attrs.csv"));
        kg::LoadOptions o;
        o.relations = kg::RelationRegistry::from_csv(rel);
        return std::make_shared<const kg::GraphSnapshot>(kg::load_triples(t, a, o).snapshot);
    }();
    return snap;
}

const query::ParserResources& fixture_resources() {
    static const auto res = query::ParserResources::load(fixture_dir());
    return res;
}

const query::Lexicon& fixture_lexicon() {
    static const auto lex = query::Lexicon::build(*fixture_snapshot(), fixture_resources());
    return lex;
}

std::shared_ptr<const session::Engine> fixture_engine() {
    static const auto engine = std::make_shared<const session::Engine>(fixture_snapshot(), fixture_resources(),
                                                                       match::MatchConfig{}, llm::Gateway{});
    return engine;
}

TempDir::TempDir() {
    std::random_device rd;
    auto base = std::filesystem::temp_directory_path();
    for (;;) {
        auto p = base / ("genie-test-" + std::to_string(rd()));
        if (std::filesystem::create_directory(p)) {
            path_ = p.string();
            return;
        }
    }
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

}  // namespace genie::test
