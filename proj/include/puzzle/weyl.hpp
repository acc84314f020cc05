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

#ifndef PUZZLE_WEYL_HPP
#define PUZZLE_WEYL_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/diagram.hpp"
#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"

namespace puzzle {

/// A permutation (type A) or signed permutation (type C) in one-line
/// notation: images[i-1] = w(i), with w(-i) = -w(i).
class GroupElement {
 public:
  GroupElement(WeylType type, std::vector<int> images);
  static GroupElement identity(WeylType type, int rank);

  WeylType type() const { return type_; }
  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// w(x) for a signed index x.
  int operator()(int x) const { return x > 0 ? images_[x - 1] : -images_[-x - 1]; }

  GroupElement inverse() const;
  bool is_identity() const;

  /// "3 -1 2".
  std::string to_string() const;
  static GroupElement parse(std::string_view text, WeylType type);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  WeylType type_;
  std::vector<int> images_;
};

/// Composition of functions: (a * b)(x) = a(b(x)).
GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// s_i: swaps i and i+1 for i < rank; in type C, s_rank negates rank.
GroupElement simple_reflection(int i, WeylType type, int rank);
/// q_1 * q_2 * ... * q_k.
GroupElement word_to_element(const std::vector<int>& word, WeylType type, int rank);

/// Coxeter length: the number of positive roots the element sends negative.
int length(const GroupElement& w);
/// Greedy reduced word: the first letter is the smallest left descent, recursively.
std::vector<int> reduced_word(const GroupElement& w);
/// Every element, in lexicographic order of (|images|, signs).
std::vector<GroupElement> all_elements(WeylType type, int rank);

/// Roots are linear forms in y_1..y_rank stored as integer coefficient vectors.
using Root = std::vector<int>;
Root simple_root(int i, WeylType type, int rank);
/// w . y_i = y_{w(i)} with y_{-j} = -y_j, extended linearly.
Root act(const GroupElement& w, const Root& r);
/// The first nonzero coefficient is positive.
bool is_positive(const Root& r);
Polynomial root_polynomial(const Root& r);

/// Position |w(i)| holds omega_i, dualized when w(i) < 0.
LabelString coset_string(const GroupElement& w, const LabelString& omega);
/// Minimum-length w with coset_string(w, omega) = s.
GroupElement shortest_lift(const LabelString& s, const LabelString& omega, WeylType type);

/// Sum over reduced subwords R of a reduced word Q for sigma with product pi
/// of the products of beta_i = (q_1 ... q_{i-1}) . alpha_{q_i}. Q defaults to
/// reduced_word(sigma); a supplied word must be a reduced word for sigma.
Polynomial ajs_billey_subword(const GroupElement& pi, const GroupElement& sigma,
                              const std::optional<std::vector<int>>& word = std::nullopt);
/// pi <= sigma in Bruhat order (pi is a subword of a reduced word for sigma).
bool bruhat_leq(const GroupElement& pi, const GroupElement& sigma);

WeylType weyl_type(const FlagSpace& space);

Polynomial restriction_subword(const LabelString& lambda, const LabelString& mu, const FlagSpace& space);
Polynomial restriction_wiring(const LabelString& lambda, const LabelString& mu, const FlagSpace& space);
/// S_lambda restricted to the fixed point mu, by both backends. Throws
/// std::logic_error if they disagree.
Polynomial restriction(const LabelString& lambda, const LabelString& mu, const FlagSpace& space);

/// y_{n+i} -> -y_{n+1-i} for i = 1..n; y_1..y_n fixed.
Substitution symplectic_specialization(int n);

}  // namespace puzzle

#endif  // PUZZLE_WEYL_HPP
