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

#include "puzzle/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace puzzle {

namespace {

Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json mono = Json::object();
    for (int id = 0; id < Variable::kCount; ++id)
      if (int e = t.monomial.exponent_at(id)) mono[Variable::from_id(id).name()] = e;
    terms.push_back(Json::array({integer_to_json(t.coefficient), mono}));
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_object())
      throw std::invalid_argument("term must be [coefficient, {variable: exponent}]");
    Monomial m;
    for (const auto& [name, e] : t[1].items()) m = m * Monomial(Variable::parse(name), e.get<int>());
    terms.push_back(Term{m, integer_from_json(t[0])});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json expansion_to_json(const ExpansionResult& e, const Json& input, bool verbose_labels) {
  Json doc;
  doc["space"] = e.space.name();
  doc["input"] = input;
  Json rows = Json::array();
  for (const auto& [nu, c] : e.coefficients) {
    auto it = e.puzzles.find(nu);
    Json row;
    row["nu"] = verbose_labels ? nu.verbose() : nu.compact();
    row["coefficient"] = polynomial_to_json(c);
    row["puzzles"] = it == e.puzzles.end() ? 0 : it->second;
    rows.push_back(std::move(row));
  }
  doc["expansion"] = std::move(rows);
  return doc;
}

std::map<LabelString, Polynomial> coefficients_from_json(const Json& doc) {
  std::map<LabelString, Polynomial> out;
  for (const Json& row : doc.at("expansion"))
    out.emplace(LabelString::parse(row.at("nu").get<std::string>()), polynomial_from_json(row.at("coefficient")));
  return out;
}

Json report_to_json(const Report& r) {
  Json doc;
  doc["subject"] = r.subject;
  doc["checked"] = r.checked;
  doc["failed"] = r.failed;
  doc["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  return doc;
}

}  // namespace puzzle
