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

#include "doctest.h"
#include "puzzle/json_io.hpp"
#include "puzzle/schubert.hpp"
#include "puzzle/weyl.hpp"
#include "support.hpp"

using namespace puzzle;
using puzzle::testing::P;
using puzzle::testing::S;

TEST_SUITE("schubert") {
  TEST_CASE("two-step product examples") {
    ExpansionResult e = two_step_product(S("101"), S("100"), 3);
    CHECK(e.space == FlagSpace::two_step(1, 2, 3));
    CHECK(e.coefficients == std::map<LabelString, Polynomial>{{S("102"), P("y1 - y2")}, {S("120"), Polynomial(1)}});
    CHECK(e.puzzles == std::map<LabelString, int>{{S("102"), 1}, {S("120"), 1}});

    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
          ExpansionResult unit = two_step_product(omega(FlagSpace::grassmannian(j, n)), omega(FlagSpace::grassmannian(k, n)), n);
          CHECK(unit.coefficients == std::map<LabelString, Polynomial>{{omega(FlagSpace::two_step(j, k, n)), Polynomial(1)}});
        }

    ExpansionResult sq = two_step_product(S("0101"), S("0101"), 4);
    int total = 0;
    for (const auto& [nu, c] : sq.puzzles) total += c;
    CHECK(total == 3);
  }

  TEST_CASE("two-step product preconditions") {
    CHECK_THROWS_AS(two_step_product(S("100"), S("101"), 3), std::invalid_argument);  // j > k
    CHECK_THROWS_AS(two_step_product(S("102"), S("100"), 3), std::invalid_argument);
    CHECK_THROWS_AS(two_step_product(S("10"), S("100"), 3), std::invalid_argument);
  }

  TEST_CASE("restriction examples") {
    CHECK(restrict_to_spgr(S("0101"), 2, 2).coefficients == std::map<LabelString, Polynomial>{{S("01"), Polynomial(1)}});
    ExpansionResult e = restrict_to_spgr(S("110101"), 2, 3);
    CHECK(e.coefficients == std::map<LabelString, Polynomial>{
                                {S("210"), P("y2 - y3")}, {S("211"), Polynomial(1)}, {S("120"), Polynomial(1)}});
    CHECK(nonequivariant(e) == std::map<LabelString, Integer>{{S("211"), 1}, {S("120"), 1}});
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(restrict_to_spgr(omega(FlagSpace::grassmannian(k, 2 * n)), k, n).coefficients ==
              std::map<LabelString, Polynomial>{{omega(FlagSpace::symplectic(k, n)), Polynomial(1)}});
    CHECK_THROWS_AS(restrict_to_spgr(S("0011"), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to_spgr(S("011"), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to_spgr(S("0011"), 3, 2), std::invalid_argument);
  }

  TEST_CASE("nonequivariant edge cases") {
    ExpansionResult empty{FlagSpace::grassmannian(1, 2), {}, {}};
    CHECK(nonequivariant(empty).empty());
    ExpansionResult two{FlagSpace::grassmannian(1, 2), {{S("01"), Polynomial(2)}}, {}};
    CHECK(nonequivariant(two) == std::map<LabelString, Integer>{{S("01"), 2}});
    ExpansionResult negative{FlagSpace::grassmannian(1, 2), {{S("01"), P("y1 - 1")}}, {}};
    CHECK_THROWS_AS(nonequivariant(negative), std::logic_error);
  }

  TEST_CASE("support and self-duality properties of restrictions") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        for (const LabelString& lambda : fixed_points(FlagSpace::grassmannian(k, 2 * n))) {
          ExpansionResult e = restrict_to_spgr(lambda, k, n);
          int puzzles = 0;
          for (const auto& [nu, c] : e.puzzles) puzzles += c;
          for (const auto& [nu, c] : e.coefficients) {
            CHECK(nu.count(Label::Ten) == n - k);
            CHECK(e.puzzles.count(nu));
          }
          if (puzzles == 0) CHECK(e.coefficients.empty());
        }
  }

  TEST_CASE("product coefficients are positive in the differences y_i - y_j") {
    for (int n = 1; n <= 4; ++n) {
      const auto roots = puzzle::testing::type_a_positive_roots(n);
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j)
          for (const LabelString& lambda : fixed_points(FlagSpace::grassmannian(j, n)))
            for (const LabelString& mu : fixed_points(FlagSpace::grassmannian(k, n)))
              for (const auto& [nu, c] : two_step_product(lambda, mu, n).coefficients) {
                // Substituting y_i = (n - i + 1) * t turns every root into a positive multiple of t.
                Substitution s;
                for (int i = 1; i <= n; ++i) s.emplace(Variable::y(i), Polynomial(n - i + 1) * Polynomial::y(1));
                for (const Term& t : c.substitute(s).terms()) CHECK(t.coefficient > 0);
                CHECK(nu.content() == omega(FlagSpace::two_step(j, k, n)).content());
              }
    }
  }

  TEST_CASE("reports") {
    Report r = duality_check(1, 2);
    CHECK(r.passed());
    CHECK(r.checked == 8);
    CHECK(duality_check(2, 4).passed());
    CHECK(duality_check(1, 3).passed());

    Report a = crosscheck_restriction(1, 1);
    CHECK(a.checked == 4);
    CHECK(a.passed());
    CHECK(crosscheck_restriction(1, 2).checked == 16);
    Report b = crosscheck_restriction(2, 2);
    CHECK(b.checked == 24);
    CHECK(b.passed());
    CHECK_FALSE(b.first_failure);

    CHECK(crosscheck_product(1, 2, 3).passed());
    CHECK(crosscheck_product(1, 1, 2).passed());
    CHECK(crosscheck_product(2, 2, 4).passed());
  }

  TEST_CASE("json schema round trip") {
    ExpansionResult e = restrict_to_spgr(S("110101"), 2, 3);
    Json doc = expansion_to_json(e, Json{{"lambda", "110101"}, {"k", 2}, {"n", 3}});
    CHECK(doc["space"] == "SpGr(2,6)");
    CHECK(doc["expansion"][0]["nu"] == "210");
    CHECK(doc["expansion"][0]["coefficient"] == Json::parse(R"([[1, {"y2": 1}], [-1, {"y3": 1}]])"));
    CHECK(doc["expansion"][0]["puzzles"] == 1);
    CHECK(coefficients_from_json(Json::parse(doc.dump())) == e.coefficients);
    Json verbose = expansion_to_json(e, Json::object(), true);
    CHECK(verbose["expansion"][0]["nu"] == "10,1,0");
    CHECK(coefficients_from_json(verbose) == e.coefficients);

    Polynomial big(1);
    for (int i = 0; i < 30; ++i) big *= Polynomial(1000);
    big = big * P("y1") + P("3*y2^2");
    Json pj = polynomial_to_json(big);
    int strings = 0;
    for (const Json& term : pj) strings += term[0].is_string();
    CHECK(strings == 1);
    CHECK(polynomial_from_json(Json::parse(pj.dump())) == big);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse("[[1, 2]]")), std::invalid_argument);

    Report r = crosscheck_restriction(1, 1);
    Json rj = report_to_json(r);
    CHECK(rj["checked"] == 4);
    CHECK(rj["failed"] == 0);
    CHECK(rj["first_failure"].is_null());
  }
}
