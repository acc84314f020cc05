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

#ifndef PUZZLE_LABELS_HPP
#define PUZZLE_LABELS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace puzzle {

/// Edge label. The enumerator order is the alphabet order 0 < 10 < 1.
enum class Label : std::uint8_t { Zero = 0, Ten = 1, One = 2 };

inline constexpr Label kAllLabels[] = {Label::Zero, Label::Ten, Label::One};

/// Exchanges 0 and 1; 10 is fixed.
constexpr Label swap_zero_one(Label l) {
  return l == Label::Zero ? Label::One : l == Label::One ? Label::Zero : Label::Ten;
}

/// "0", "10", "1".
std::string_view token(Label l);
/// '0', '2', '1' (compact digit encoding).
char digit(Label l);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  /// 1-based offending position.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Content {
  int zeros = 0;
  int tens = 0;
  int ones = 0;
  friend bool operator==(const Content&, const Content&) = default;
};

class LabelString {
 public:
  LabelString() = default;
  LabelString(std::initializer_list<Label> symbols) : symbols_(symbols) {}
  explicit LabelString(std::vector<Label> symbols) : symbols_(std::move(symbols)) {}

  /// Comma-separated tokens over {0,10,1} ("0,10,1"), or a compact digit word
  /// over {0,1,2} with 2 standing for 10 ("021"). Throws ParseError.
  static LabelString parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Label operator[](std::size_t i) const { return symbols_[i]; }
  Label& operator[](std::size_t i) { return symbols_[i]; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  const std::vector<Label>& symbols() const { return symbols_; }
  void push_back(Label l) { symbols_.push_back(l); }

  Content content() const;
  /// Number of occurrences of one label.
  int count(Label l) const;

  /// Compact digit form, e.g. "210".
  std::string compact() const;
  /// Token form, e.g. "10,1,0".
  std::string verbose() const;

  /// Lexicographic under 0 < 10 < 1.
  friend auto operator<=>(const LabelString&, const LabelString&) = default;
  friend bool operator==(const LabelString&, const LabelString&) = default;

 private:
  std::vector<Label> symbols_;
};

std::ostream& operator<<(std::ostream& os, const LabelString& s);

LabelString parse_string(std::string_view text);
Content content(const LabelString& s);

/// Reverse the string and exchange 0 <-> 1 (10 fixed).
LabelString dualize(const LabelString& s);

/// nu followed by dualize(nu), then every 10 turned into 1. The result is a
/// 0/1 string of length 2 * |nu| naming a fixed point of Gr(k, 2n).
LabelString double_string(const LabelString& nu);

LabelString concat(const LabelString& a, const LabelString& b);

/// One of the three homogeneous spaces the engine works on.
class FlagSpace {
 public:
  enum class Kind { Grassmannian, SymplecticGrassmannian, TwoStepFlag };

  /// Gr(k, m): k-planes in C^m.
  static FlagSpace grassmannian(int k, int m);
  /// SpGr(k, 2n): isotropic k-planes in C^{2n}; strings have length n.
  static FlagSpace symplectic(int k, int n);
  /// Fl(j, k; C^m).
  static FlagSpace two_step(int j, int k, int m);

  Kind kind() const { return kind_; }
  int j() const { return j_; }
  int k() const { return k_; }
  /// Length of the indexing strings (m for Gr and Fl, n for SpGr).
  int rank() const { return rank_; }
  /// True for SpGr (type C Weyl group).
  bool symplectic_type() const { return kind_ == Kind::SymplecticGrassmannian; }

  /// Whether s indexes a fixed point (Schubert class) of this space.
  bool contains(const LabelString& s) const;
  /// "Gr(2,4)", "SpGr(2,6)", "Fl(1,2;3)".
  std::string name() const;

  friend bool operator==(const FlagSpace&, const FlagSpace&) = default;

 private:
  FlagSpace(Kind kind, int j, int k, int rank) : kind_(kind), j_(j), k_(k), rank_(rank) {}
  Kind kind_;
  int j_;
  int k_;
  int rank_;
};

/// The identity-coset string: 0^k 1^{m-k}, 0^k (10)^{n-k}, or 0^j (10)^{k-j} 1^{m-k}.
LabelString omega(const FlagSpace& space);

enum class FlagProjection { J, K };

/// Image of a two-step fixed point under the projection to Gr(j) (10 -> 1) or Gr(k) (10 -> 0).
LabelString project_flag_string(const LabelString& nu, FlagProjection which);

/// Pattern for enumerate_strings: an exact content, or the SpGr(k, 2n) pattern
/// (length n, exactly n - k TENs, the rest free over {0, 1}).
struct SymplecticPattern {
  int k;
  int n;
};
using ContentPattern = std::variant<Content, SymplecticPattern>;

/// All strings of the given length matching the pattern, in lexicographic order.
std::vector<LabelString> enumerate_strings(std::size_t length, const ContentPattern& pattern);

/// All fixed-point strings of a space, in lexicographic order.
std::vector<LabelString> fixed_points(const FlagSpace& space);

}  // namespace puzzle

#endif  // PUZZLE_LABELS_HPP
