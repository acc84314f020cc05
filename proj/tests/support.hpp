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

// Independent oracles and generators shared by the unit and acceptance tests.
// Nothing here calls the code path it is used to check.

#ifndef PUZZLE_TESTS_SUPPORT_HPP
#define PUZZLE_TESTS_SUPPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "puzzle/diagram.hpp"
#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"
#include "puzzle/weyl.hpp"

namespace puzzle::testing {

inline LabelString S(const char* text) { return LabelString::parse(text); }
inline Polynomial P(const char* text) { return Polynomial::parse(text); }

/// Every string of the given length over {0, 10, 1}.
inline std::vector<LabelString> all_strings(std::size_t length) {
  std::vector<LabelString> out{LabelString{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<LabelString> next;
    for (const LabelString& s : out)
      for (Label l : kAllLabels) {
        LabelString t = s;
        t.push_back(l);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

/// Numeric evaluation at an integer point, term by term (y_i -> point[i-1],
/// u_i -> point[16 + i - 1]).
inline Integer evaluate_at(const Polynomial& p, const std::vector<long long>& point) {
  Integer total = 0;
  for (const Term& t : p.terms()) {
    Integer v = t.coefficient;
    for (int id = 0; id < Variable::kCount; ++id)
      for (int e = 0; e < t.monomial.exponent_at(id); ++e) v *= point.at(id);
    total += v;
  }
  return total;
}

inline std::vector<long long> random_point(std::mt19937& rng, long long bound = 50) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  std::vector<long long> pt(Variable::kCount);
  for (auto& x : pt) x = d(rng);
  return pt;
}

/// Random polynomial with small coefficients in y_1..y_vars.
inline Polynomial random_polynomial(std::mt19937& rng, int vars, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> nterms(0, max_terms), var(1, vars), deg(0, max_degree), coef(-9, 9);
  Polynomial p;
  for (int t = nterms(rng); t > 0; --t) {
    Polynomial m(coef(rng));
    for (int d = deg(rng); d > 0; --d) m *= Polynomial::y(var(rng));
    p += m;
  }
  return p;
}

inline std::vector<Polynomial> type_a_positive_roots(int n) {
  std::vector<Polynomial> r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.push_back(Polynomial::y(i) - Polynomial::y(j));
  return r;
}

inline std::vector<Polynomial> type_c_positive_roots(int n) {
  std::vector<Polynomial> r = type_a_positive_roots(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) r.push_back(Polynomial::y(i) + Polynomial::y(j));
    r.push_back(Polynomial(2) * Polynomial::y(i));
  }
  return r;
}

/// Divides out factors from `roots` while possible; returns the cofactor and
/// appends the factors found. The factors multiplied back must give p.
inline Polynomial strip_roots(Polynomial p, const std::vector<Polynomial>& roots,
                              std::vector<Polynomial>* factors = nullptr) {
  bool progress = true;
  while (progress && !p.is_constant()) {
    progress = false;
    for (const Polynomial& r : roots) {
      if (auto q = p.divide_exact(r)) {
        if (factors) factors->push_back(r);
        p = std::move(*q);
        progress = true;
        break;
      }
    }
  }
  return p;
}

/// Length by breadth-first search in the Cayley graph (independent of the
/// root-counting formula).
inline std::map<GroupElement, int> cayley_distances(WeylType type, int rank) {
  std::map<GroupElement, int> dist;
  std::queue<GroupElement> q;
  GroupElement id = GroupElement::identity(type, rank);
  dist.emplace(id, 0);
  q.push(id);
  const int max = type == WeylType::A ? rank - 1 : rank;
  while (!q.empty()) {
    GroupElement w = q.front();
    q.pop();
    for (int i = 1; i <= max; ++i) {
      GroupElement v = w * simple_reflection(i, type, rank);
      if (dist.emplace(v, dist[w] + 1).second) q.push(v);
    }
  }
  return dist;
}

/// A random reduced word for w: strip a uniformly chosen right descent.
inline std::vector<int> random_reduced_word(const GroupElement& w, std::mt19937& rng) {
  const auto dist = cayley_distances(w.type(), w.rank());
  const int max = w.type() == WeylType::A ? w.rank() - 1 : w.rank();
  std::vector<int> word;
  GroupElement cur = w;
  while (dist.at(cur) > 0) {
    std::vector<int> descents;
    for (int i = 1; i <= max; ++i)
      if (dist.at(cur * simple_reflection(i, w.type(), w.rank())) < dist.at(cur)) descents.push_back(i);
    int i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    word.insert(word.begin(), i);
    cur = cur * simple_reflection(i, w.type(), w.rank());
  }
  return word;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace puzzle::testing

#endif  // PUZZLE_TESTS_SUPPORT_HPP
