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

#include "puzzle/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace puzzle {

GroupElement::GroupElement(WeylType type, std::vector<int> images)
    : type_(type), images_(std::move(images)) {
  const int m = rank();
  std::vector<bool> seen(m + 1, false);
  for (int x : images_) {
    int a = std::abs(x);
    if (a < 1 || a > m || seen[a])
      throw std::invalid_argument("not a signed permutation of 1.." + std::to_string(m));
    if (type_ == WeylType::A && x < 0)
      throw std::invalid_argument("type A elements have no negative images");
    seen[a] = true;
  }
}

GroupElement GroupElement::identity(WeylType type, int rank) {
  std::vector<int> images(rank);
  std::iota(images.begin(), images.end(), 1);
  return GroupElement(type, std::move(images));
}

GroupElement GroupElement::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= rank(); ++i) {
    int x = images_[i - 1];
    inv[std::abs(x) - 1] = x > 0 ? i : -i;
  }
  return GroupElement(type_, std::move(inv));
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  return os.str();
}

GroupElement GroupElement::parse(std::string_view text, WeylType type) {
  std::istringstream is{std::string(text)};
  std::vector<int> images;
  std::string tok;
  while (is >> tok) {
    bool bar = false;
    if (tok.back() == '\'') {
      bar = true;
      tok.pop_back();
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw ParseError("bad one-line entry '" + tok + "'", images.size() + 1);
    images.push_back(bar ? -v : v);
  }
  return GroupElement(type, std::move(images));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.type() != b.type() || a.rank() != b.rank())
    throw std::invalid_argument("product of elements from different groups");
  std::vector<int> images(a.rank());
  for (int i = 1; i <= a.rank(); ++i) images[i - 1] = a(b(i));
  return GroupElement(a.type(), std::move(images));
}

GroupElement simple_reflection(int i, WeylType type, int rank) {
  const int max = type == WeylType::A ? rank - 1 : rank;
  if (i < 1 || i > max)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(max));
  GroupElement id = GroupElement::identity(type, rank);
  std::vector<int> images = id.images();
  if (i == rank) images[i - 1] = -i;
  else std::swap(images[i - 1], images[i]);
  return GroupElement(type, std::move(images));
}

GroupElement word_to_element(const std::vector<int>& word, WeylType type, int rank) {
  GroupElement w = GroupElement::identity(type, rank);
  for (int q : word) w = w * simple_reflection(q, type, rank);
  return w;
}

// ---------------------------------------------------------------- roots

Root simple_root(int i, WeylType type, int rank) {
  Root r(rank, 0);
  if (type == WeylType::C && i == rank) {
    r[i - 1] = 2;
  } else {
    r[i - 1] = 1;
    r[i] = -1;
  }
  return r;
}

Root act(const GroupElement& w, const Root& r) {
  Root out(r.size(), 0);
  for (int i = 1; i <= static_cast<int>(r.size()); ++i) {
    int t = w(i);
    out[std::abs(t) - 1] += t > 0 ? r[i - 1] : -r[i - 1];
  }
  return out;
}

bool is_positive(const Root& r) {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

Polynomial root_polynomial(const Root& r) {
  Polynomial p;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) p += Polynomial(r[i]) * Polynomial::y(static_cast<int>(i) + 1);
  return p;
}

int length(const GroupElement& w) {
  // Count inversions among the positive roots y_i - y_j, y_i + y_j, 2 y_i.
  const int m = w.rank();
  auto negative = [&](int a, int sa, int b, int sb) {
    // sign of the root sa*y_{w(a)} + sb*y_{w(b)} (b may be 0 for 2y_a).
    Root r(m, 0);
    int ta = w(a) * sa;
    r[std::abs(ta) - 1] += ta > 0 ? 1 : -1;
    if (b) {
      int tb = w(b) * sb;
      r[std::abs(tb) - 1] += tb > 0 ? 1 : -1;
    }
    return !is_positive(r);
  };
  int count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      count += negative(i, 1, j, -1);
      if (w.type() == WeylType::C) count += negative(i, 1, j, 1);
    }
    if (w.type() == WeylType::C) count += negative(i, 1, 0, 1);
  }
  return count;
}

std::vector<int> reduced_word(const GroupElement& w) {
  const int m = w.rank();
  const int max = w.type() == WeylType::A ? m - 1 : m;
  std::vector<int> word;
  GroupElement cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int i = 1; i <= max; ++i) {
      GroupElement next = simple_reflection(i, w.type(), m) * cur;
      int l = length(next);
      if (l < len) {
        word.push_back(i);
        cur = next;
        len = l;
        break;
      }
    }
  }
  return word;
}

std::vector<GroupElement> all_elements(WeylType type, int rank) {
  std::vector<GroupElement> out;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (type == WeylType::A) {
      out.emplace_back(type, perm);
      continue;
    }
    for (int mask = 0; mask < (1 << rank); ++mask) {
      std::vector<int> images = perm;
      for (int i = 0; i < rank; ++i)
        if (mask & (1 << (rank - 1 - i))) images[i] = -images[i];
      out.emplace_back(type, std::move(images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------- cosets

LabelString coset_string(const GroupElement& w, const LabelString& omega) {
  if (static_cast<int>(omega.size()) != w.rank())
    throw std::invalid_argument("coset_string: omega has length " + std::to_string(omega.size()) +
                                ", group rank is " + std::to_string(w.rank()));
  std::vector<Label> s(omega.size());
  for (int i = 1; i <= w.rank(); ++i) {
    int t = w(i);
    s[std::abs(t) - 1] = t > 0 ? omega[i - 1] : swap_zero_one(omega[i - 1]);
  }
  return LabelString(std::move(s));
}

GroupElement shortest_lift(const LabelString& s, const LabelString& omega, WeylType type) {
  const int m = static_cast<int>(omega.size());
  if (static_cast<int>(s.size()) != m)
    throw std::invalid_argument("shortest_lift: length mismatch");
  std::vector<int> images(m, 0);
  for (Label x : kAllLabels) {
    std::vector<int> src, dst;
    for (int i = 0; i < m; ++i)
      if (omega[i] == x) src.push_back(i);
    if (src.empty()) continue;
    if (type == WeylType::A || x == Label::Ten) {
      for (int p = 0; p < m; ++p)
        if (s[p] == x) dst.push_back(p + 1);
    } else {
      // Unbarred targets increasing, then barred targets decreasing.
      for (int p = 0; p < m; ++p)
        if (s[p] == x) dst.push_back(p + 1);
      for (int p = m - 1; p >= 0; --p)
        if (s[p] == swap_zero_one(x)) dst.push_back(-(p + 1));
    }
    if (dst.size() < src.size())
      throw std::invalid_argument("string " + s.compact() + " is not in the orbit of " + omega.compact());
    for (std::size_t a = 0; a < src.size(); ++a) images[src[a]] = dst[a];
  }
  for (int x : images)
    if (x == 0) throw std::invalid_argument("string " + s.compact() + " is not in the orbit of " + omega.compact());
  GroupElement w(type, std::move(images));
  if (coset_string(w, omega) != s)
    throw std::invalid_argument("string " + s.compact() + " is not in the orbit of " + omega.compact());
  return w;
}

// ---------------------------------------------------------------- subwords

namespace {

void check_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.type() != b.type() || a.rank() != b.rank())
    throw std::invalid_argument("elements from different groups");
}

// Visits every reduced subword of `word` (as index lists) with product `target`.
void for_each_reduced_subword(const std::vector<int>& word, const GroupElement& target,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  const WeylType type = target.type();
  const int m = target.rank();
  const int need = length(target);
  std::vector<GroupElement> gens;
  const int max = type == WeylType::A ? m - 1 : m;
  for (int i = 1; i <= max; ++i) gens.push_back(simple_reflection(i, type, m));

  std::vector<int> chosen;
  bool stop = false;
  std::function<void(std::size_t, const GroupElement&)> rec = [&](std::size_t pos, const GroupElement& prod) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == need) {
      if (prod == target) stop = !visit(chosen);
      return;
    }
    if (word.size() - pos < static_cast<std::size_t>(need) - chosen.size()) return;
    // Take word[pos] only if the product stays reduced.
    const int q = word[pos];
    if (is_positive(act(prod, simple_root(q, type, m)))) {
      chosen.push_back(static_cast<int>(pos));
      rec(pos + 1, prod * gens[q - 1]);
      chosen.pop_back();
    }
    rec(pos + 1, prod);
  };
  rec(0, GroupElement::identity(type, m));
}

}  // namespace

Polynomial ajs_billey_subword(const GroupElement& pi, const GroupElement& sigma,
                              const std::optional<std::vector<int>>& word) {
  check_same_group(pi, sigma);
  const std::vector<int> q = word ? *word : reduced_word(sigma);
  if (word && (word_to_element(q, sigma.type(), sigma.rank()) != sigma ||
               static_cast<int>(q.size()) != length(sigma)))
    throw std::invalid_argument("supplied word is not a reduced word for sigma");
  // beta_i = (q_1 ... q_{i-1}) . alpha_{q_i}
  std::vector<Polynomial> beta;
  GroupElement prefix = GroupElement::identity(sigma.type(), sigma.rank());
  for (int letter : q) {
    beta.push_back(root_polynomial(act(prefix, simple_root(letter, sigma.type(), sigma.rank()))));
    prefix = prefix * simple_reflection(letter, sigma.type(), sigma.rank());
  }
  Polynomial total;
  for_each_reduced_subword(q, pi, [&](const std::vector<int>& r) {
    Polynomial term(1);
    for (int i : r) term *= beta[i];
    total += term;
    return true;
  });
  return total;
}

bool bruhat_leq(const GroupElement& pi, const GroupElement& sigma) {
  check_same_group(pi, sigma);
  bool found = false;
  for_each_reduced_subword(reduced_word(sigma), pi, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------- restriction

WeylType weyl_type(const FlagSpace& space) {
  return space.symplectic_type() ? WeylType::C : WeylType::A;
}

namespace {

void check_point(const LabelString& s, const FlagSpace& space, const char* what) {
  if (!space.contains(s))
    throw std::invalid_argument(std::string(what) + " = " + s.compact() + " does not index a fixed point of " +
                                space.name());
}

}  // namespace

Polynomial restriction_subword(const LabelString& lambda, const LabelString& mu, const FlagSpace& space) {
  check_point(lambda, space, "lambda");
  check_point(mu, space, "mu");
  const LabelString om = omega(space);
  const WeylType type = weyl_type(space);
  return ajs_billey_subword(shortest_lift(lambda, om, type), shortest_lift(mu, om, type));
}

Polynomial restriction_wiring(const LabelString& lambda, const LabelString& mu, const FlagSpace& space) {
  check_point(lambda, space, "lambda");
  check_point(mu, space, "mu");
  const LabelString om = omega(space);
  const WeylType type = weyl_type(space);
  const std::vector<int> word = reduced_word(shortest_lift(mu, om, type));
  return evaluate_entry(build_wiring_diagram(word, type, space.rank()), lambda, om);
}

Polynomial restriction(const LabelString& lambda, const LabelString& mu, const FlagSpace& space) {
  Polynomial a = restriction_subword(lambda, mu, space);
  Polynomial b = restriction_wiring(lambda, mu, space);
  if (!(a == b))
    throw std::logic_error("restriction backends disagree at " + lambda.compact() + "|" + mu.compact() +
                           " on " + space.name() + ": subword " + a.to_string() + ", wiring " +
                           b.to_string());
  return a;
}

Substitution symplectic_specialization(int n) {
  Substitution sub;
  for (int i = 1; i <= n; ++i) sub.emplace(Variable::y(n + i), -Polynomial::y(n + 1 - i));
  return sub;
}

}  // namespace puzzle
