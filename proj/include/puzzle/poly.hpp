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

#ifndef PUZZLE_POLY_HPP
#define PUZZLE_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace puzzle {

using Integer = boost::multiprecision::cpp_int;

/// A polynomial variable: an equivariant parameter y_i (1 <= i <= kMaxY)
/// or a formal spectral parameter u_i (1 <= i <= kMaxU).
class Variable {
 public:
  enum class Family : std::uint8_t { Y, U };

  static constexpr int kMaxY = 16;
  static constexpr int kMaxU = 3;
  static constexpr int kCount = kMaxY + kMaxU;

  static Variable y(int index);
  static Variable u(int index);
  /// Inverse of |name()|: "y3", "u1".
  static Variable parse(std::string_view name);

  Family family() const { return family_; }
  int index() const { return index_; }
  /// Position in the global variable order y1 < y2 < ... < y16 < u1 < u2 < u3.
  int id() const { return family_ == Family::Y ? index_ - 1 : kMaxY + index_ - 1; }
  static Variable from_id(int id);
  std::string name() const;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) { return a.id() <=> b.id(); }

 private:
  Variable(Family f, int i) : family_(f), index_(i) {}
  Family family_;
  int index_;
};

/// Exponent vector over the fixed variable universe.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(Variable v, int power = 1);

  int exponent(Variable v) const { return exps_[v.id()]; }
  int exponent_at(int id) const { return exps_[id]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for *this | other.
  Monomial quotient_of(const Monomial& other) const;

  /// Graded lexicographic: higher total degree first, then larger exponent of
  /// the lowest-indexed variable first. `a < b` means a comes AFTER b in
  /// canonical (leading-first) order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, Variable::kCount> exps_;
  int degree_ = 0;
};

struct Term {
  Monomial monomial;
  Integer coefficient;
};

class Polynomial;
using Substitution = std::map<Variable, Polynomial>;

/// Sparse multivariate polynomial over Z. Terms are kept in canonical order
/// (leading grlex term first) with no zero coefficients, so structural
/// equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Integer& c);

  static Polynomial y(int i) { return Polynomial(Variable::y(i)); }
  static Polynomial u(int i) { return Polynomial(Variable::u(i)); }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Parses the text form, e.g. "-2*y1^2*y3 + y2".
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Integer constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::vector<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& p, const Polynomial& q);

  /// Ring homomorphism sending each mapped variable to its image (degree <= 1).
  /// Unmapped variables are kept unless `strict`, in which case they raise
  /// std::invalid_argument("unmapped variable ...").
  Polynomial substitute(const Substitution& map, bool strict = false) const;

  /// Exact quotient p / d over Z[vars], or nullopt when d does not divide p.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

bool poly_equals(const Polynomial& p, const Polynomial& q);

}  // namespace puzzle

#endif  // PUZZLE_POLY_HPP
