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

#ifndef PUZZLE_JSON_IO_HPP
#define PUZZLE_JSON_IO_HPP

#include <map>

#include "json.hpp"
#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"
#include "puzzle/schubert.hpp"

namespace puzzle {

using Json = nlohmann::ordered_json;

/// [[coefficient, {"y2": 1}], ...]; coefficients outside int64 are strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"space", "input", "expansion": [{"nu", "coefficient", "puzzles"}]}.
Json expansion_to_json(const ExpansionResult& e, const Json& input, bool verbose_labels = false);
/// Reads back the "expansion" array of an expansion document.
std::map<LabelString, Polynomial> coefficients_from_json(const Json& doc);

/// {"checked", "failed", "first_failure"}.
Json report_to_json(const Report& r);

}  // namespace puzzle

#endif  // PUZZLE_JSON_IO_HPP
