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

#include <memory>
#include <string>

#include "genie/kg/snapshot.hpp"
#include "genie/query/lexicon.hpp"
#include "genie/query/resources.hpp"
#include "genie/session/session.hpp"

namespace genie::test {

const std::string& fixture_dir();
std::string fixture_path(const std::string& name);

std::shared_ptr<const kg::GraphSnapshot> fixture_snapshot();
const query::ParserResources& fixture_resources();
const query::Lexicon& fixture_lexicon();
std::shared_ptr<const session::Engine> fixture_engine();

// Fresh directory under the system temp dir, removed by the destructor.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::string& path() const { return path_; }
    std::string file(const std::string& name) const { return path_ + "/" + name; }

private:
    std::string path_;
};

}  // namespace genie::test
