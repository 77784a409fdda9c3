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

#include <istream>
#include <memory>
#include <vector>

#include "genie/session/profile.hpp"
#include "genie/session/session.hpp"

namespace genie::session {

// One action per line. Throws Error(malformed_row) with the line number.
std::vector<InteractionAction> read_log(std::istream& in);

// Runs the recorded operations again on a fresh session, with the clock
// returning each record's timestamp.
std::unique_ptr<Session> replay(std::shared_ptr<const Engine> engine, const std::vector<InteractionAction>& log,
                                std::ostream* sink = nullptr);

}  // namespace genie::session
