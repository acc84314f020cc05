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

#include <sstream>

#include "doctest.h"
#include "puzzle/cli.hpp"
#include "puzzle/json_io.hpp"
#include "support.hpp"

using namespace puzzle;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("restrict prints the expansion") {
    Result r = call({"restrict", "--lambda", "110101", "--k", "2", "--n", "3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "210 : y2 - y3\n211 : 1\n120 : 1\n");
    Result v = call({"--verbose-labels", "restrict", "--lambda", "110101", "--k", "2", "--n", "3"});
    CHECK(v.out == "10,1,0 : y2 - y3\n10,1,1 : 1\n1,10,0 : 1\n");
  }

  TEST_CASE("product prints the expansion") {
    Result r = call({"product", "--lambda", "101", "--mu", "100", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "102 : y1 - y2\n120 : 1\n");
  }

  TEST_CASE("verify-identities") {
    Result r = call({"verify-identities"});
    CHECK(r.code == 0);
    CHECK(r.out == "8/8 identities hold\n");
    CHECK(call({"verify-identities", "--identity", "yb-rrg"}).out == "1/1 identities hold\n");
    CHECK(call({"verify-identities", "--identity", "bogus"}).code == 1);
  }

  TEST_CASE("json output follows the schema and is deterministic") {
    std::vector<std::string> args{"restrict", "--lambda", "110101", "--k", "2", "--n", "3", "--format", "json"};
    Result a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Json doc = Json::parse(a.out);
    CHECK(doc["space"] == "SpGr(2,6)");
    CHECK(doc["input"]["lambda"] == "110101");
    CHECK(doc["expansion"].size() == 3);
    CHECK(coefficients_from_json(doc).size() == 3);

    Json rep = Json::parse(call({"crosscheck", "--k", "1", "--n", "2", "--format", "json"}).out);
    CHECK(rep["checked"] == 16);
    CHECK(rep["failed"] == 0);
    CHECK(rep["first_failure"].is_null());
  }

  TEST_CASE("reports and exit codes") {
    Result c = call({"crosscheck", "--kind", "product", "--j", "1", "--k", "2", "--n", "3"});
    CHECK(c.code == 0);
    CHECK(c.out == "crosscheck_product j=1 k=2 n=3: 54 checked, 0 failed\n");
    Result d = call({"duality", "--k", "1", "--m", "2"});
    CHECK(d.code == 0);
    CHECK(d.out == "duality k=1 m=2: 8 checked, 0 failed\n");
  }

  TEST_CASE("restriction-at-point") {
    Result r = call({"restriction-at-point", "--space", "Gr(1,2)", "--lambda", "10", "--mu", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "y1 - y2\n");
    CHECK(call({"restriction-at-point", "--space", "SpGr(1,4)", "--lambda", "12", "--mu", "12"}).code == 0);
    CHECK(call({"restriction-at-point", "--space", "Fl(1,2;3)", "--lambda", "021", "--mu", "201"}).code == 0);
    CHECK(cli::parse_space("Fl(1,2;3)") == FlagSpace::two_step(1, 2, 3));
    CHECK(cli::parse_space("SpGr(2,6)") == FlagSpace::symplectic(2, 3));
    CHECK_THROWS_AS(cli::parse_space("SpGr(1,3)"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_space("P(1)"), std::invalid_argument);
  }

  TEST_CASE("enumerate dumps labelings") {
    Result r = call({"enumerate", "--diagram", "half", "--n", "3", "--out", "110101"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 labelings\n") != std::string::npos);
    CHECK(r.out.find("fugacity: y2 - y3\n") != std::string::npos);
    Result t = call({"enumerate", "--diagram", "triangle", "--n", "4", "--out", "01010101", "--format", "json"});
    CHECK(Json::parse(t.out)["count"] == 3);
    Result w = call({"enumerate", "--diagram", "wiring", "--type", "C", "--word", "2 3 1", "--n", "3", "--in", "022"});
    CHECK(w.code == 0);
  }

  TEST_CASE("validation errors exit with 1") {
    Result bad = call({"restrict", "--lambda", "110131", "--k", "2", "--n", "3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("position 5") != std::string::npos);
    Result content = call({"restrict", "--lambda", "111101", "--k", "2", "--n", "3"});
    CHECK(content.code == 1);
    CHECK(content.err.find("zeros") != std::string::npos);
    CHECK(call({"product", "--lambda", "100", "--mu", "101", "--n", "3"}).code == 1);
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"restrict", "--lambda", "0101"}).code == 1);
    CHECK(call({"--format", "xml", "verify-identities"}).code == 1);
    CHECK(call({"crosscheck", "--kind", "product", "--k", "1", "--n", "2"}).code == 1);
    CHECK(call({"enumerate", "--diagram", "wiring", "--word", "1 x", "--n", "2"}).code == 1);
  }

  TEST_CASE("help exits with 0") { CHECK(call({"--help"}).code == 0); }
}
