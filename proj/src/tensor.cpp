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

#include "puzzle/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace puzzle {

char colour_letter(Colour c) {
  switch (c) {
    case Colour::Green: return 'G';
    case Colour::Red: return 'R';
    case Colour::Blue: return 'B';
  }
  return '?';
}

SparseMap::SparseMap(int out_arity, int in_arity) : out_arity_(out_arity), in_arity_(in_arity) {
  if (out_arity < 0 || in_arity < 0) throw std::invalid_argument("negative arity");
}

Polynomial SparseMap::entry(const LabelTuple& out, const LabelTuple& in) const {
  auto it = entries_.find(Key{out, in});
  return it == entries_.end() ? Polynomial{} : it->second;
}

void SparseMap::set(const LabelTuple& out, const LabelTuple& in, Polynomial value) {
  if (static_cast<int>(out.size()) != out_arity_ || static_cast<int>(in.size()) != in_arity_)
    throw std::invalid_argument("entry arity mismatch");
  if (value.is_zero()) entries_.erase(Key{out, in});
  else entries_[Key{out, in}] = std::move(value);
}

void SparseMap::add(const LabelTuple& out, const LabelTuple& in, const Polynomial& value) {
  set(out, in, entry(out, in) + value);
}

SparseMap SparseMap::substitute(const Substitution& map) const {
  SparseMap r(out_arity_, in_arity_);
  for (const auto& [key, value] : entries_) r.set(key.first, key.second, value.substitute(map));
  return r;
}

std::string SparseMap::dump() const {
  std::ostringstream os;
  for (const auto& [key, value] : entries_)
    os << LabelString(key.first).verbose() << " <- " << LabelString(key.second).verbose()
       << " : " << value << '\n';
  return os.str();
}

SparseMap identity_map(int arity) {
  SparseMap id(arity, arity);
  LabelTuple t(arity, Label::Zero);
  // Odometer over {0,10,1}^arity.
  while (true) {
    id.set(t, t, Polynomial(1));
    int i = arity - 1;
    while (i >= 0 && t[i] == Label::One) t[i--] = Label::Zero;
    if (i < 0) break;
    t[i] = static_cast<Label>(static_cast<int>(t[i]) + 1);
  }
  return id;
}

SparseMap compose(const SparseMap& outer, const SparseMap& inner) {
  if (inner.out_arity() != outer.in_arity())
    throw std::invalid_argument("compose: arity mismatch");
  std::multimap<LabelTuple, std::pair<const LabelTuple*, const Polynomial*>> by_input;
  for (const auto& [key, value] : outer.entries())
    by_input.emplace(key.second, std::make_pair(&key.first, &value));
  SparseMap r(outer.out_arity(), inner.in_arity());
  for (const auto& [key, value] : inner.entries()) {
    auto [lo, hi] = by_input.equal_range(key.first);
    for (auto it = lo; it != hi; ++it) r.add(*it->second.first, key.second, *it->second.second * value);
  }
  return r;
}

SparseMap compose_all(const std::vector<SparseMap>& factors) {
  if (factors.empty()) throw std::invalid_argument("compose_all: no factors");
  SparseMap acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

SparseMap tensor(const SparseMap& a, const SparseMap& b) {
  SparseMap r(a.out_arity() + b.out_arity(), a.in_arity() + b.in_arity());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) {
      LabelTuple out = ka.first, in = ka.second;
      out.insert(out.end(), kb.first.begin(), kb.first.end());
      in.insert(in.end(), kb.second.begin(), kb.second.end());
      r.set(out, in, va * vb);
    }
  return r;
}

SparseMap tensor_all(const std::vector<SparseMap>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_all: no factors");
  SparseMap acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

namespace {

constexpr Label O = Label::Zero;
constexpr Label T = Label::Ten;
constexpr Label I = Label::One;

}  // namespace

// Entries are written (i, j, k, l) = (top-left, top-right, bottom-left,
// bottom-right) as in the crossing pictures.
SparseMap r_matrix(CrossingKind kind, const Polynomial& argument) {
  SparseMap r(2, 2);
  if (kind == CrossingKind::SameColour) {
    for (Label i : kAllLabels)
      for (Label j : kAllLabels) r.set({i, j}, {i, j}, Polynomial(1));
    const Polynomial b_minus_a = -argument;
    r.set({I, O}, {O, I}, b_minus_a);
    r.set({T, O}, {O, T}, b_minus_a);
    r.set({I, T}, {T, I}, b_minus_a);
  } else {
    r.set({O, I}, {I, O}, argument);
    const Label unit[9][4] = {{O, O, O, O}, {I, I, I, I}, {O, O, I, T}, {O, T, I, I}, {O, T, T, O},
                              {I, O, O, I}, {I, I, T, O}, {T, I, O, O}, {T, I, I, T}};
    for (const auto& q : unit) r.set({q[0], q[1]}, {q[2], q[3]}, Polynomial(1));
  }
  return r;
}

SparseMap k_matrix(BounceKind kind, const Polynomial& a) {
  SparseMap k(1, 1);
  if (kind == BounceKind::KR) {
    k.set({I}, {O}, Polynomial(1));
    k.set({O}, {I}, Polynomial(1));
  } else {
    for (Label l : kAllLabels) k.set({l}, {l}, Polynomial(1));
    k.set({I}, {O}, Polynomial(-2) * a);
  }
  return k;
}

SparseMap u_matrix() {
  SparseMap u(2, 1);
  // (green, red) <- blue
  u.set({O, O}, {O}, Polynomial(1));
  u.set({O, T}, {I}, Polynomial(1));
  u.set({I, O}, {T}, Polynomial(1));
  u.set({I, I}, {I}, Polynomial(1));
  u.set({T, I}, {O}, Polynomial(1));
  return u;
}

// ---------------------------------------------------------------- identities

std::vector<Identity> all_identities() {
  return {Identity::YangBaxterRRG, Identity::YangBaxterGGR, Identity::YangBaxterGGG,
          Identity::YangBaxterBBB, Identity::TrivalentSwap, Identity::ReflectionRG,
          Identity::ReflectionBB,  Identity::KFusion};
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::YangBaxterRRG: return "yb-rrg";
    case Identity::YangBaxterGGR: return "yb-ggr";
    case Identity::YangBaxterGGG: return "yb-ggg";
    case Identity::YangBaxterBBB: return "yb-bbb";
    case Identity::TrivalentSwap: return "trivalent-swap";
    case Identity::ReflectionRG: return "reflection-rg";
    case Identity::ReflectionBB: return "reflection-bb";
    case Identity::KFusion: return "k-fusion";
  }
  return "?";
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (Identity id : all_identities())
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

IdentitySides identity_sides(Identity id, const SparseMap& u) {
  const Polynomial u1 = Polynomial::u(1), u2 = Polynomial::u(2), u3 = Polynomial::u(3);
  const SparseMap one = identity_map(1);
  auto same = [](const Polynomial& x) { return r_matrix(CrossingKind::SameColour, x); };
  auto rg = [](const Polynomial& x) { return r_matrix(CrossingKind::RedGreen, x); };
  auto kr = [](const Polynomial& x) { return k_matrix(BounceKind::KR, x); };
  auto kb = [](const Polynomial& x) { return k_matrix(BounceKind::KB, x); };

  // Strands enter left to right with parameters u3, u2, u1 and leave as
  // u1, u2, u3. crossAB is the matrix for the crossing of strands uA and uB.
  auto yang_baxter = [&](auto cross12, auto cross13, auto cross23) {
    IdentitySides s{
        compose_all({tensor(cross12(u2 - u1), one), tensor(one, cross13(u3 - u1)),
                     tensor(cross23(u3 - u2), one)}),
        compose_all({tensor(one, cross23(u3 - u2)), tensor(cross13(u3 - u1), one),
                     tensor(one, cross12(u2 - u1))})};
    return s;
  };

  switch (id) {
    case Identity::YangBaxterRRG: return yang_baxter(rg, rg, same);
    case Identity::YangBaxterGGR: return yang_baxter(same, rg, rg);
    case Identity::YangBaxterGGG:
    case Identity::YangBaxterBBB: return yang_baxter(same, same, same);
    case Identity::TrivalentSwap:
      return {compose_all({tensor_all({one, rg(u1 - u2), one}), tensor(u, u), same(u2 - u1)}),
              compose_all({tensor(same(u2 - u1), same(u2 - u1)), tensor_all({one, rg(u2 - u1), one}),
                           tensor(u, u)})};
    case Identity::ReflectionRG:
      return {compose_all({tensor(one, kr(-u2)), rg(-u2 - u1), tensor(one, kr(-u1)), same(-u1 + u2)}),
              compose_all({same(u2 - u1), tensor(one, kr(-u1)), rg(-u1 - u2), tensor(one, kr(-u2))})};
    case Identity::ReflectionBB:
      return {compose_all({tensor(one, kb(-u2)), same(-u2 - u1), tensor(one, kb(-u1)), same(-u1 + u2)}),
              compose_all({same(u2 - u1), tensor(one, kb(-u1)), same(-u1 - u2), tensor(one, kb(-u2))})};
    case Identity::KFusion:
      return {compose_all({tensor(one, kr(u1)), u, kb(-u1)}),
              compose_all({same(Polynomial(-2) * u1), tensor(one, kr(-u1)), u})};
  }
  throw std::invalid_argument("unknown identity");
}

bool verify_identity(Identity id, const SparseMap& u) {
  IdentitySides s = identity_sides(id, u);
  return s.lhs == s.rhs;
}

}  // namespace puzzle
