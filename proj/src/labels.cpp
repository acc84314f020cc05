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

#include "puzzle/labels.hpp"

#include <algorithm>
#include <functional>

namespace puzzle {

std::string_view token(Label l) {
  switch (l) {
    case Label::Zero: return "0";
    case Label::Ten: return "10";
    case Label::One: return "1";
  }
  return "?";
}

char digit(Label l) {
  switch (l) {
    case Label::Zero: return '0';
    case Label::Ten: return '2';
    case Label::One: return '1';
  }
  return '?';
}

LabelString LabelString::parse(std::string_view text) {
  std::vector<Label> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(',', start);
      std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok == "0") out.push_back(Label::Zero);
      else if (tok == "10") out.push_back(Label::Ten);
      else if (tok == "1") out.push_back(Label::One);
      else
        throw ParseError("bad label token '" + std::string(tok) + "' at position " +
                             std::to_string(out.size() + 1),
                         out.size() + 1);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return LabelString(std::move(out));
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': out.push_back(Label::Zero); break;
      case '1': out.push_back(Label::One); break;
      case '2': out.push_back(Label::Ten); break;
      default:
        throw ParseError("bad label character '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(i + 1),
                         i + 1);
    }
  }
  return LabelString(std::move(out));
}

Content LabelString::content() const {
  Content c;
  for (Label l : symbols_) {
    if (l == Label::Zero) ++c.zeros;
    else if (l == Label::Ten) ++c.tens;
    else ++c.ones;
  }
  return c;
}

int LabelString::count(Label l) const {
  return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), l));
}

std::string LabelString::compact() const {
  std::string s;
  for (Label l : symbols_) s.push_back(digit(l));
  return s;
}

std::string LabelString::verbose() const {
  std::string s;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s.push_back(',');
    s += token(symbols_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LabelString& s) { return os << s.compact(); }

LabelString parse_string(std::string_view text) { return LabelString::parse(text); }

Content content(const LabelString& s) { return s.content(); }

LabelString dualize(const LabelString& s) {
  std::vector<Label> out;
  out.reserve(s.size());
  for (auto it = s.symbols().rbegin(); it != s.symbols().rend(); ++it)
    out.push_back(swap_zero_one(*it));
  return LabelString(std::move(out));
}

LabelString double_string(const LabelString& nu) {
  LabelString out = concat(nu, dualize(nu));
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == Label::Ten) out[i] = Label::One;
  return out;
}

LabelString concat(const LabelString& a, const LabelString& b) {
  std::vector<Label> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return LabelString(std::move(out));
}

// ---------------------------------------------------------------- FlagSpace

FlagSpace FlagSpace::grassmannian(int k, int m) {
  if (m < 1 || k < 0 || k > m)
    throw std::invalid_argument("Gr(k,m) needs 0 <= k <= m and m >= 1, got Gr(" +
                                std::to_string(k) + "," + std::to_string(m) + ")");
  return FlagSpace(Kind::Grassmannian, k, k, m);
}

FlagSpace FlagSpace::symplectic(int k, int n) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("SpGr(k,2n) needs 0 <= k <= n and n >= 1, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
  return FlagSpace(Kind::SymplecticGrassmannian, k, k, n);
}

FlagSpace FlagSpace::two_step(int j, int k, int m) {
  if (m < 1 || j < 0 || j > k || k > m)
    throw std::invalid_argument("Fl(j,k;m) needs 0 <= j <= k <= m and m >= 1, got Fl(" +
                                std::to_string(j) + "," + std::to_string(k) + ";" +
                                std::to_string(m) + ")");
  return FlagSpace(Kind::TwoStepFlag, j, k, m);
}

bool FlagSpace::contains(const LabelString& s) const {
  if (static_cast<int>(s.size()) != rank_) return false;
  Content c = s.content();
  switch (kind_) {
    case Kind::Grassmannian: return c == Content{k_, 0, rank_ - k_};
    case Kind::TwoStepFlag: return c == Content{j_, k_ - j_, rank_ - k_};
    case Kind::SymplecticGrassmannian: return c.tens == rank_ - k_;
  }
  return false;
}

std::string FlagSpace::name() const {
  switch (kind_) {
    case Kind::Grassmannian:
      return "Gr(" + std::to_string(k_) + "," + std::to_string(rank_) + ")";
    case Kind::SymplecticGrassmannian:
      return "SpGr(" + std::to_string(k_) + "," + std::to_string(2 * rank_) + ")";
    case Kind::TwoStepFlag:
      return "Fl(" + std::to_string(j_) + "," + std::to_string(k_) + ";" +
             std::to_string(rank_) + ")";
  }
  return "?";
}

LabelString omega(const FlagSpace& space) {
  std::vector<Label> out;
  auto append = [&](Label l, int times) { out.insert(out.end(), std::max(times, 0), l); };
  switch (space.kind()) {
    case FlagSpace::Kind::Grassmannian:
      append(Label::Zero, space.k());
      append(Label::One, space.rank() - space.k());
      break;
    case FlagSpace::Kind::SymplecticGrassmannian:
      append(Label::Zero, space.k());
      append(Label::Ten, space.rank() - space.k());
      break;
    case FlagSpace::Kind::TwoStepFlag:
      append(Label::Zero, space.j());
      append(Label::Ten, space.k() - space.j());
      append(Label::One, space.rank() - space.k());
      break;
  }
  return LabelString(std::move(out));
}

LabelString project_flag_string(const LabelString& nu, FlagProjection which) {
  LabelString out = nu;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == Label::Ten) out[i] = which == FlagProjection::J ? Label::One : Label::Zero;
  return out;
}

std::vector<LabelString> enumerate_strings(std::size_t length, const ContentPattern& pattern) {
  // free01 >= 0 selects the symplectic pattern: 0s and 1s share one budget.
  int remaining[3] = {0, 0, 0};
  int free01 = -1;
  if (const auto* c = std::get_if<Content>(&pattern)) {
    if (c->zeros < 0 || c->tens < 0 || c->ones < 0 ||
        static_cast<std::size_t>(c->zeros + c->tens + c->ones) != length)
      return {};
    remaining[0] = c->zeros;
    remaining[1] = c->tens;
    remaining[2] = c->ones;
  } else {
    const auto& sp = std::get<SymplecticPattern>(pattern);
    if (sp.k < 0 || sp.k > sp.n || static_cast<std::size_t>(sp.n) != length) return {};
    remaining[1] = sp.n - sp.k;
    free01 = sp.k;
  }

  std::vector<LabelString> out;
  std::vector<Label> cur;
  cur.reserve(length);
  std::function<void()> rec = [&]() {
    if (cur.size() == length) {
      out.emplace_back(cur);
      return;
    }
    for (Label l : kAllLabels) {
      int idx = static_cast<int>(l);
      int* budget = (free01 >= 0 && l != Label::Ten) ? &free01 : &remaining[idx];
      if (*budget <= 0) continue;
      --*budget;
      cur.push_back(l);
      rec();
      cur.pop_back();
      ++*budget;
    }
  };
  rec();
  return out;
}

std::vector<LabelString> fixed_points(const FlagSpace& space) {
  if (space.symplectic_type())
    return enumerate_strings(space.rank(), SymplecticPattern{space.k(), space.rank()});
  return enumerate_strings(space.rank(), omega(space).content());
}

}  // namespace puzzle
