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

#ifndef PUZZLE_SCHUBERT_HPP
#define PUZZLE_SCHUBERT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"

namespace puzzle {

/// Coefficients of an expansion in the Schubert basis of `space`. Only
/// nonzero coefficients are stored; keys iterate in lexicographic order.
struct ExpansionResult {
  FlagSpace space;
  std::map<LabelString, Polynomial> coefficients;
  /// Number of contributing puzzles for each key of `coefficients`.
  std::map<LabelString, int> puzzles;
};

struct Report {
  std::string subject;  // e.g. "crosscheck_restriction k=2 n=3"
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;
  bool passed() const { return failed == 0; }
};

/// pi_j^*(S_lambda) pi_k^*(S_mu) in H_T(Fl(j,k;n)), from triangle puzzles with
/// lambda on the Northwest side, mu on the Northeast side and nu on the South.
ExpansionResult two_step_product(const LabelString& lambda, const LabelString& mu, int n);

/// Pullback of S_lambda from Gr(k,2n) to SpGr(k,2n), from half puzzles.
ExpansionResult restrict_to_spgr(const LabelString& lambda, int k, int n);

/// Sets every y_i to zero. Throws std::logic_error if a survivor is not a
/// positive integer.
std::map<LabelString, Integer> nonequivariant(const ExpansionResult& e);

/// c(lambda, mu; nu) = c(mu*, lambda*; nu*) over all triples on Gr(k,m).
Report duality_check(int k, int m);

/// Localization check of restrict_to_spgr at every fixed point of SpGr(k,2n).
Report crosscheck_restriction(int k, int n);

/// Localization check of two_step_product at every fixed point of Fl(j,k;n).
Report crosscheck_product(int j, int k, int n);

}  // namespace puzzle

#endif  // PUZZLE_SCHUBERT_HPP
