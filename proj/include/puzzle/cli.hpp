// Copyright 2026 The puzzlecalc Authors
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

#ifndef PUZZLE_CLI_HPP
#define PUZZLE_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/labels.hpp"

namespace puzzle::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kCheckFailed = 2 };

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inverse of FlagSpace::name(): "Gr(2,4)", "SpGr(1,4)", "Fl(1,2;3)".
FlagSpace parse_space(std::string_view text);

}  // namespace puzzle::cli

#endif  // PUZZLE_CLI_HPP
