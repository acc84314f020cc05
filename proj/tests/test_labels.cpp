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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "puzzle/labels.hpp"
#include "support.hpp"

using namespace puzzle;
using puzzle::testing::S;

TEST_SUITE("labels") {
  TEST_CASE("parsing both encodings") {
    CHECK(S("210") == LabelString{Label::Ten, Label::One, Label::Zero});
    CHECK(S("10,1,0") == S("210"));
    CHECK(S(" 10 , 1 ,0") == S("210"));
    CHECK(S("10") == LabelString{Label::One, Label::Zero});
    CHECK(S("210").verbose() == "10,1,0");
    CHECK(S("10,1,0").compact() == "210");
    CHECK(S("").empty());
  }

  TEST_CASE("parse errors name the position") {
    try {
      S("0130");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    try {
      S("0,11,1");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("order is 0 < 10 < 1") {
    CHECK(S("0") < S("2"));
    CHECK(S("2") < S("1"));
    CHECK(S("210") < S("120"));
  }

  TEST_CASE("dualize and double") {
    CHECK(dualize(S("0121")) == S("0201"));
    CHECK(double_string(S("02")) == S("0111"));
    CHECK(double_string(S("210")) == S("110101"));
    CHECK(double_string(S("")) == S(""));
    CHECK(content(S("0211")) == Content{1, 1, 2});
  }

  TEST_CASE("spaces and omega") {
    CHECK(omega(FlagSpace::grassmannian(2, 4)) == S("0011"));
    CHECK(omega(FlagSpace::symplectic(1, 3)) == S("022"));
    CHECK(omega(FlagSpace::two_step(1, 2, 3)) == S("021"));
    CHECK(FlagSpace::symplectic(2, 3).name() == "SpGr(2,6)");
    CHECK(FlagSpace::two_step(1, 2, 3).name() == "Fl(1,2;3)");
    CHECK_THROWS_AS(FlagSpace::grassmannian(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(FlagSpace::two_step(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FlagSpace::symplectic(1, 0), std::invalid_argument);
    CHECK(FlagSpace::symplectic(1, 2).contains(S("12")));
    CHECK_FALSE(FlagSpace::symplectic(1, 2).contains(S("11")));
  }

  TEST_CASE("projections") {
    CHECK(project_flag_string(S("102"), FlagProjection::J) == S("101"));
    CHECK(project_flag_string(S("102"), FlagProjection::K) == S("100"));
  }

  TEST_CASE("fixed point counts") {
    CHECK(fixed_points(FlagSpace::grassmannian(2, 4)).size() == 6);
    CHECK(fixed_points(FlagSpace::symplectic(2, 3)).size() == 12);  // 3 * 2^2
    CHECK(fixed_points(FlagSpace::two_step(1, 2, 4)).size() == 12);
    auto pts = fixed_points(FlagSpace::symplectic(1, 2));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
  }

  TEST_CASE("property: dualize is an involution reversing content") {
    std::mt19937 rng(11);
    for (int len = 0; len <= 7; ++len)
      for (const LabelString& s : puzzle::testing::all_strings(len)) {
        CHECK(dualize(dualize(s)) == s);
        Content c = s.content(), d = dualize(s).content();
        CHECK(c.zeros == d.ones);
        CHECK(c.tens == d.tens);
        LabelString dbl = double_string(s);
        CHECK(dbl.size() == 2 * s.size());
        CHECK(dbl.count(Label::Ten) == 0);
        // A lone "10" without commas reads as the compact word 1,0.
        if (s.size() != 1) CHECK(LabelString::parse(s.verbose()) == s);
        CHECK(LabelString::parse(s.compact()) == s);
      }
  }

  TEST_CASE("property: enumerated strings are exactly the matching ones") {
    for (int n = 0; n <= 5; ++n)
      for (int z = 0; z <= n; ++z)
        for (int t = 0; z + t <= n; ++t) {
          Content want{z, t, n - z - t};
          std::size_t count = 0;
          for (const LabelString& s : puzzle::testing::all_strings(n)) count += s.content() == want;
          auto got = enumerate_strings(n, want);
          CHECK(got.size() == count);
          for (const LabelString& s : got) CHECK(s.content() == want);
        }
  }
}
