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

#include "puzzle/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace puzzle {

// ---------------------------------------------------------------- Variable

Variable Variable::y(int index) {
  if (index < 1 || index > kMaxY)
    throw std::out_of_range("variable y" + std::to_string(index) + " outside y1..y" +
                            std::to_string(kMaxY));
  return Variable(Family::Y, index);
}

Variable Variable::u(int index) {
  if (index < 1 || index > kMaxU)
    throw std::out_of_range("variable u" + std::to_string(index) + " outside u1..u" +
                            std::to_string(kMaxU));
  return Variable(Family::U, index);
}

Variable Variable::from_id(int id) { return id < kMaxY ? y(id + 1) : u(id - kMaxY + 1); }

Variable Variable::parse(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'y' && name[0] != 'u'))
    throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
  int index = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
    index = index * 10 + (c - '0');
    if (index > 1000) throw std::invalid_argument("variable index too large");
  }
  return name[0] == 'y' ? y(index) : u(index);
}

std::string Variable::name() const {
  return (family_ == Family::Y ? "y" : "u") + std::to_string(index_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, int power) {
  exps_.fill(0);
  if (power < 0 || power > 255) throw std::out_of_range("monomial exponent out of range");
  exps_[v.id()] = static_cast<std::uint8_t>(power);
  degree_ = power;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < Variable::kCount; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < Variable::kCount; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < Variable::kCount; ++i)
    r.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  r.degree_ = other.degree_ - degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (int i = 0; i < Variable::kCount; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool leading_first(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merge two canonical term lists; sign = +1 or -1 applied to q.
std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q, int sign) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && p[i].monomial > q[j].monomial)) {
      out.push_back(p[i++]);
    } else if (i == p.size() || q[j].monomial > p[i].monomial) {
      out.push_back(q[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Integer c = p[i].coefficient;
      if (sign > 0) c += q[j].coefficient;
      else c -= q[j].coefficient;
      if (c != 0) out.push_back(Term{p[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial::Polynomial(Variable v) { terms_.push_back(Term{Monomial(v), Integer(1)}); }

Polynomial::Polynomial(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), leading_first);
  Polynomial p;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = std::move(terms[i++]);
    while (i < terms.size() && terms[i].monomial == t.monomial) t.coefficient += terms[i++].coefficient;
    if (t.coefficient != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Integer(0);
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vars;
  for (int id = 0; id < Variable::kCount; ++id)
    for (const auto& t : terms_)
      if (t.monomial.exponent_at(id) > 0) {
        vars.push_back(Variable::from_id(id));
        break;
      }
  return vars;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  if (terms_.empty()) return *this = q;
  terms_ = merge(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial{};
  if (q.is_constant() && q.terms_[0].coefficient == 1) return p;
  if (p.is_constant() && p.terms_[0].coefficient == 1) return q;
  const Polynomial& big = p.terms_.size() >= q.terms_.size() ? p : q;
  const Polynomial& small = &big == &p ? q : p;
  // Each row big * (one term of small) is already canonical; merge the rows.
  Polynomial acc;
  for (const auto& s : small.terms_) {
    Polynomial row;
    row.terms_.reserve(big.terms_.size());
    for (const auto& b : big.terms_)
      row.terms_.push_back(Term{b.monomial * s.monomial, b.coefficient * s.coefficient});
    acc += row;
  }
  return acc;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].monomial == q.terms_[i].monomial) ||
        p.terms_[i].coefficient != q.terms_[i].coefficient)
      return false;
  return true;
}

bool poly_equals(const Polynomial& p, const Polynomial& q) { return p == q; }

Polynomial Polynomial::substitute(const Substitution& map, bool strict) const {
  for (const auto& [var, image] : map)
    if (image.degree() > 1)
      throw std::invalid_argument("substitution image for " + var.name() + " has degree > 1");

  std::array<const Polynomial*, Variable::kCount> images{};
  for (const auto& [var, image] : map) images[var.id()] = &image;
  for (const auto& var : variables())
    if (!images[var.id()] && strict)
      throw std::invalid_argument("unmapped variable " + var.name());

  // powers[id][e] = image^e, built lazily.
  std::array<std::vector<Polynomial>, Variable::kCount> powers;
  auto power = [&](int id, int e) -> const Polynomial& {
    auto& cache = powers[id];
    if (cache.empty()) {
      cache.emplace_back(1);
      cache.push_back(images[id] ? *images[id] : Polynomial(Variable::from_id(id)));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  Polynomial result;
  for (const auto& t : terms_) {
    Polynomial term(t.coefficient);
    for (int id = 0; id < Variable::kCount && !term.is_zero(); ++id)
      if (int e = t.monomial.exponent_at(id); e > 0) term *= power(id, e);
    result += term;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = d.terms_.front();
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.terms_.front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    if (r.coefficient % lead.coefficient != 0) return std::nullopt;
    Term q{lead.monomial.quotient_of(r.monomial), r.coefficient / lead.coefficient};
    remainder -= d * Polynomial(q.monomial, q.coefficient);
    quotient.push_back(std::move(q));
  }
  return from_terms(std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.monomial.is_one()) {
      os << c;
      wrote = true;
    }
    for (int id = 0; id < Variable::kCount; ++id) {
      int e = t.monomial.exponent_at(id);
      if (e == 0) continue;
      if (wrote) os << '*';
      os << Variable::from_id(id).name();
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// Grammar: poly := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := integer | var ['^' integer]. Whitespace is ignored.
Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos + 1) +
                                ": " + what);
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return Integer(s.substr(start, pos - start));
  };

  std::vector<Term> terms;
  bool expect_term = true;
  while (pos < s.size() || expect_term) {
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!terms.empty()) {
      fail("expected '+' or '-'");
    }
    if (pos >= s.size()) fail("expected term");
    Term term{Monomial{}, Integer(sign)};
    while (true) {
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        term.coefficient *= read_int();
      } else if (s[pos] == 'y' || s[pos] == 'u') {
        std::size_t start = pos++;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Variable v = Variable::parse(s.substr(start, pos - start));
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = static_cast<int>(read_int());
        }
        term.monomial = term.monomial * Monomial(v, e);
      } else {
        fail(std::string("unexpected character '") + s[pos] + "'");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size()) fail("expected factor");
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
    expect_term = false;
  }
  return from_terms(std::move(terms));
}

}  // namespace puzzle
