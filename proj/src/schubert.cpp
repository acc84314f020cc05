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

#include "puzzle/schubert.hpp"

#include <stdexcept>
#include <utility>

#include "puzzle/diagram.hpp"
#include "puzzle/weyl.hpp"

namespace puzzle {

namespace {

bool has_content(const LabelString& s, int zeros, int ones) {
  return s.content() == Content{zeros, 0, ones};
}

std::string describe(const Content& c) {
  return std::to_string(c.zeros) + " zeros, " + std::to_string(c.tens) + " tens, " +
         std::to_string(c.ones) + " ones";
}

// Restrictions are evaluated many times per crosscheck; memoize per space.
class RestrictionCache {
 public:
  explicit RestrictionCache(FlagSpace space) : space_(space) {}
  const Polynomial& operator()(const LabelString& lambda, const LabelString& mu) {
    auto key = std::make_pair(lambda, mu);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, restriction(lambda, mu, space_)).first;
    return it->second;
  }

 private:
  FlagSpace space_;
  std::map<std::pair<LabelString, LabelString>, Polynomial> cache_;
};

void record(Report& r, bool ok, const std::string& detail) {
  ++r.checked;
  if (ok) return;
  ++r.failed;
  if (!r.first_failure) r.first_failure = detail;
}

}  // namespace

ExpansionResult two_step_product(const LabelString& lambda, const LabelString& mu, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("lambda and mu must have length n = " + std::to_string(n));
  const Content cl = lambda.content(), cm = mu.content();
  if (cl.tens != 0) throw std::invalid_argument("lambda must be a 0/1 string, got " + describe(cl));
  if (cm.tens != 0) throw std::invalid_argument("mu must be a 0/1 string, got " + describe(cm));
  const int j = cl.zeros, k = cm.zeros;
  if (j > k)
    throw std::invalid_argument("lambda has more zeros than mu (j = " + std::to_string(j) +
                                " > k = " + std::to_string(k) + ")");

  ExpansionResult result{FlagSpace::two_step(j, k, n), {}, {}};
  const ScatteringDiagram d = build_triangle_diagram(n);
  const LabelString out = concat(lambda, mu);
  for (const LabelString& nu : fixed_points(result.space)) {
    Polynomial c = evaluate_entry(d, out, nu);
    if (!c.is_zero()) result.coefficients.emplace(nu, std::move(c));
  }
  for (const Labeling& l : enumerate_labelings(d, out, std::nullopt))
    ++result.puzzles[labeling_inputs(d, l)];
  return result;
}

ExpansionResult restrict_to_spgr(const LabelString& lambda, int k, int n) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("need 0 <= k <= n and n >= 1, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  if (static_cast<int>(lambda.size()) != 2 * n)
    throw std::invalid_argument("lambda must have length 2n = " + std::to_string(2 * n));
  if (!has_content(lambda, k, 2 * n - k))
    throw std::invalid_argument("lambda must have " + std::to_string(k) + " zeros and " +
                                std::to_string(2 * n - k) + " ones, got " + describe(lambda.content()));

  ExpansionResult result{FlagSpace::symplectic(k, n), {}, {}};
  const ScatteringDiagram d = build_half_diagram(n);
  for (const LabelString& nu : fixed_points(result.space)) {
    Polynomial c = evaluate_entry(d, lambda, nu);
    if (!c.is_zero()) result.coefficients.emplace(nu, std::move(c));
  }
  for (const Labeling& l : enumerate_labelings(d, lambda, std::nullopt))
    ++result.puzzles[labeling_inputs(d, l)];
  return result;
}

std::map<LabelString, Integer> nonequivariant(const ExpansionResult& e) {
  std::map<LabelString, Integer> out;
  Substitution zero;
  for (int i = 1; i <= Variable::kMaxY; ++i) zero.emplace(Variable::y(i), Polynomial());
  for (const auto& [nu, c] : e.coefficients) {
    Polynomial v = c.substitute(zero);
    if (v.is_zero()) continue;
    if (!v.is_constant() || v.constant_term() <= 0)
      throw std::logic_error("nonequivariant coefficient of " + nu.compact() + " is " + v.to_string() +
                             ", not a positive integer");
    out.emplace(nu, v.constant_term());
  }
  return out;
}

Report duality_check(int k, int m) {
  if (m < 1 || k < 0 || k > m) throw std::invalid_argument("duality_check needs 0 <= k <= m");
  Report r;
  r.subject = "duality k=" + std::to_string(k) + " m=" + std::to_string(m);
  const std::vector<LabelString> strings = fixed_points(FlagSpace::grassmannian(k, m));
  std::map<std::pair<LabelString, LabelString>, std::map<LabelString, Integer>> products;
  auto coeffs = [&](const LabelString& a, const LabelString& b) -> const std::map<LabelString, Integer>& {
    auto key = std::make_pair(a, b);
    auto it = products.find(key);
    if (it == products.end()) it = products.emplace(key, nonequivariant(two_step_product(a, b, m))).first;
    return it->second;
  };
  auto lookup = [](const std::map<LabelString, Integer>& c, const LabelString& nu) {
    auto it = c.find(nu);
    return it == c.end() ? Integer(0) : it->second;
  };
  for (const LabelString& lambda : strings)
    for (const LabelString& mu : strings) {
      const auto& direct = coeffs(lambda, mu);
      const auto& dual = coeffs(dualize(mu), dualize(lambda));
      for (const LabelString& nu : strings) {
        Integer a = lookup(direct, nu), b = lookup(dual, dualize(nu));
        record(r, a == b,
               "c(" + lambda.compact() + "," + mu.compact() + ";" + nu.compact() + ") = " + a.str() +
                   " but dual coefficient is " + b.str());
      }
    }
  return r;
}

Report crosscheck_restriction(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("crosscheck_restriction needs 0 <= k <= n");
  Report r;
  r.subject = "crosscheck_restriction k=" + std::to_string(k) + " n=" + std::to_string(n);
  const FlagSpace gr = FlagSpace::grassmannian(k, 2 * n);
  const FlagSpace sp = FlagSpace::symplectic(k, n);
  const Substitution specialize = symplectic_specialization(n);
  RestrictionCache sp_restriction(sp);
  const std::vector<LabelString> sigmas = fixed_points(sp);
  for (const LabelString& lambda : fixed_points(gr)) {
    const ExpansionResult e = restrict_to_spgr(lambda, k, n);
    for (const LabelString& sigma : sigmas) {
      Polynomial lhs = restriction(lambda, double_string(sigma), gr).substitute(specialize);
      Polynomial rhs;
      for (const auto& [nu, c] : e.coefficients) rhs += c * sp_restriction(nu, sigma);
      record(r, lhs == rhs,
             "lambda=" + lambda.compact() + " sigma=" + sigma.compact() + ": " + lhs.to_string() +
                 " != " + rhs.to_string());
    }
  }
  return r;
}

Report crosscheck_product(int j, int k, int n) {
  if (n < 1 || j < 0 || j > k || k > n) throw std::invalid_argument("crosscheck_product needs 0 <= j <= k <= n");
  Report r;
  r.subject = "crosscheck_product j=" + std::to_string(j) + " k=" + std::to_string(k) + " n=" +
           std::to_string(n);
  const FlagSpace grj = FlagSpace::grassmannian(j, n);
  const FlagSpace grk = FlagSpace::grassmannian(k, n);
  const FlagSpace fl = FlagSpace::two_step(j, k, n);
  RestrictionCache at_j(grj), at_k(grk), at_fl(fl);
  const std::vector<LabelString> sigmas = fixed_points(fl);
  for (const LabelString& lambda : fixed_points(grj))
    for (const LabelString& mu : fixed_points(grk)) {
      const ExpansionResult e = two_step_product(lambda, mu, n);
      for (const LabelString& sigma : sigmas) {
        Polynomial lhs;
        for (const auto& [nu, c] : e.coefficients) lhs += c * at_fl(nu, sigma);
        Polynomial rhs = at_j(lambda, project_flag_string(sigma, FlagProjection::J)) *
                         at_k(mu, project_flag_string(sigma, FlagProjection::K));
        record(r, lhs == rhs,
               "lambda=" + lambda.compact() + " mu=" + mu.compact() + " sigma=" + sigma.compact() + ": " +
                   lhs.to_string() + " != " + rhs.to_string());
      }
    }
  return r;
}

}  // namespace puzzle
