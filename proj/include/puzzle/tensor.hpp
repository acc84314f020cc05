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

#ifndef PUZZLE_TENSOR_HPP
#define PUZZLE_TENSOR_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"

namespace puzzle {

/// Strand colours; each carries a copy of C^3 with basis {0, 10, 1}.
enum class Colour { Green, Red, Blue };
char colour_letter(Colour c);

using LabelTuple = std::vector<Label>;

/// A linear map (C^3)^{in} -> (C^3)^{out} stored by its nonzero entries.
/// Entries are addressed (output tuple, input tuple); tuples list the strands
/// left to right, inputs entering from below and outputs leaving above.
class SparseMap {
 public:
  using Key = std::pair<LabelTuple, LabelTuple>;

  SparseMap(int out_arity, int in_arity);

  int out_arity() const { return out_arity_; }
  int in_arity() const { return in_arity_; }

  /// Entry value; zero when absent.
  Polynomial entry(const LabelTuple& out, const LabelTuple& in) const;
  /// Overwrites an entry; a zero value erases it.
  void set(const LabelTuple& out, const LabelTuple& in, Polynomial value);
  void add(const LabelTuple& out, const LabelTuple& in, const Polynomial& value);

  const std::map<Key, Polynomial>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  /// Applies a substitution to every entry.
  SparseMap substitute(const Substitution& map) const;

  /// One `out <- in : polynomial` line per entry, canonical order.
  std::string dump() const;

  friend bool operator==(const SparseMap&, const SparseMap&) = default;

 private:
  int out_arity_;
  int in_arity_;
  std::map<Key, Polynomial> entries_;
};

SparseMap identity_map(int arity = 1);
/// outer ∘ inner; requires inner.out_arity() == outer.in_arity().
SparseMap compose(const SparseMap& outer, const SparseMap& inner);
/// Left-to-right composition helper: compose_all({A, B, C}) = A ∘ B ∘ C.
SparseMap compose_all(const std::vector<SparseMap>& factors);
/// a ⊗ b, with a acting on the leftmost strands.
SparseMap tensor(const SparseMap& a, const SparseMap& b);
SparseMap tensor_all(const std::vector<SparseMap>& factors);

enum class CrossingKind { SameColour, RedGreen };
enum class BounceKind { KR, KB };

/// R(argument) where `argument` is a - b for a crossing whose left incoming
/// strand carries a and right incoming strand carries b.
SparseMap r_matrix(CrossingKind kind, const Polynomial& argument);
/// K(a) for a wall bounce of a strand arriving with parameter a.
SparseMap k_matrix(BounceKind kind, const Polynomial& a);
/// U: blue -> green ⊗ red (parameter independent).
SparseMap u_matrix();

enum class Identity {
  YangBaxterRRG,
  YangBaxterGGR,
  YangBaxterGGG,
  YangBaxterBBB,
  TrivalentSwap,
  ReflectionRG,
  ReflectionBB,
  KFusion,
};

std::vector<Identity> all_identities();
/// "yb-rrg", "yb-ggr", "yb-ggg", "yb-bbb", "trivalent-swap", "reflection-rg",
/// "reflection-bb", "k-fusion".
std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

struct IdentitySides {
  SparseMap lhs;
  SparseMap rhs;
};

/// Both sides of a diagram-move identity in the formal parameters u1, u2, u3.
/// `u` replaces the trivalent matrix (used to check that perturbations break
/// the identities).
IdentitySides identity_sides(Identity id, const SparseMap& u = u_matrix());
bool verify_identity(Identity id, const SparseMap& u = u_matrix());

}  // namespace puzzle

#endif  // PUZZLE_TENSOR_HPP
