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

#include <random>
#include <sstream>

#include "doctest.h"
#include "puzzle/poly.hpp"
#include "support.hpp"

using namespace puzzle;
using puzzle::testing::P;

TEST_SUITE("poly") {
  TEST_CASE("text round trip and canonical printing") {
    CHECK(P("y2 - y3").to_string() == "y2 - y3");
    CHECK(P("-y3 + y2") == P("y2 - y3"));
    CHECK(P("-2*y1^2*y3 + y2").to_string() == "-2*y1^2*y3 + y2");
    CHECK(Polynomial().to_string() == "0");
    CHECK(P("0").is_zero());
    CHECK(P("3 - 3").is_zero());
    CHECK(P("u1 - u2").variables().size() == 2);
    std::ostringstream os;
    os << P("y1*y2 + 1");
    CHECK(Polynomial::parse(os.str()) == P("y1*y2 + 1"));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    CHECK_THROWS_AS(P("y1 +"), std::invalid_argument);
    CHECK_THROWS_AS(P("z1"), std::invalid_argument);
    CHECK_THROWS_AS(P("y0"), std::out_of_range);
    CHECK_THROWS_AS(P("y17"), std::out_of_range);
  }

  TEST_CASE("arithmetic") {
    CHECK((P("y1") - P("y2")) * (P("y1") + P("y2")) == P("y1^2 - y2^2"));
    CHECK(P("y1") * Polynomial() == Polynomial());
    CHECK(-(P("y1 - 2")) == P("2 - y1"));
    CHECK(P("2*y1").degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(P("7").is_constant());
    CHECK(P("7 + y1").constant_term() == 7);
  }

  TEST_CASE("big coefficients do not overflow") {
    Polynomial p(1);
    for (int i = 0; i < 80; ++i) p *= Polynomial(3);
    Integer expected = 1;
    for (int i = 0; i < 80; ++i) expected *= 3;
    CHECK(p.constant_term() == expected);
    CHECK(Polynomial::parse(p.to_string()) == p);
  }

  TEST_CASE("substitution") {
    Substitution s{{Variable::y(4), -P("y1")}, {Variable::y(3), -P("y2")}};
    CHECK(P("y3 - y4").substitute(s) == P("y1 - y2"));
    CHECK(P("y1*y4").substitute(s) == P("-y1^2"));
    CHECK(P("y5").substitute(s) == P("y5"));
    CHECK_THROWS_AS(P("y5").substitute(s, true), std::invalid_argument);
    Substitution bad{{Variable::y(1), P("y2^2")}};
    CHECK_THROWS_AS(P("y1").substitute(bad), std::invalid_argument);
  }

  TEST_CASE("exact division") {
    auto q = P("y1^2 - y2^2").divide_exact(P("y1 - y2"));
    REQUIRE(q);
    CHECK(*q == P("y1 + y2"));
    CHECK_FALSE(P("y1^2 + y2^2").divide_exact(P("y1 - y2")));
    CHECK_FALSE(P("y1 + 1").divide_exact(P("2")));
    CHECK_THROWS_AS(P("y1").divide_exact(Polynomial()), std::domain_error);
  }

  TEST_CASE("property: ring laws agree with numeric evaluation") {
    std::mt19937 rng(20260);
    for (int trial = 0; trial < 300; ++trial) {
      Polynomial a = puzzle::testing::random_polynomial(rng, 4, 5, 3);
      Polynomial b = puzzle::testing::random_polynomial(rng, 4, 5, 3);
      Polynomial c = puzzle::testing::random_polynomial(rng, 4, 5, 3);
      auto pt = puzzle::testing::random_point(rng);
      auto ev = [&](const Polynomial& p) { return puzzle::testing::evaluate_at(p, pt); };
      CHECK(ev(a + b) == ev(a) + ev(b));
      CHECK(ev(a * b) == ev(a) * ev(b));
      CHECK(ev(a - b) == ev(a) - ev(b));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      CHECK(Polynomial::parse(a.to_string()) == a);
      if (!b.is_zero()) {
        auto q = (a * b).divide_exact(b);
        REQUIRE(q);
        CHECK(*q == a);
      }
    }
  }

  TEST_CASE("property: linear substitution is a ring homomorphism") {
    std::mt19937 rng(7);
    Substitution s{{Variable::y(1), P("y2 - y3")}, {Variable::y(2), P("-y1")}, {Variable::y(3), P("2*y4 + 1")}};
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial a = puzzle::testing::random_polynomial(rng, 4, 4, 3);
      Polynomial b = puzzle::testing::random_polynomial(rng, 4, 4, 3);
      CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
      CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
    }
  }
}
