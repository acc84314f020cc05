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

#include "puzzle/cli.hpp"

#include <algorithm>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "puzzle/diagram.hpp"
#include "puzzle/json_io.hpp"
#include "puzzle/schubert.hpp"
#include "puzzle/tensor.hpp"
#include "puzzle/weyl.hpp"

namespace puzzle::cli {

FlagSpace parse_space(std::string_view text) {
  static const std::regex gr(R"(Gr\((\d+),(\d+)\))");
  static const std::regex spgr(R"(SpGr\((\d+),(\d+)\))");
  static const std::regex fl(R"(Fl\((\d+),(\d+);(\d+)\))");
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  std::smatch m;
  if (std::regex_match(s, m, gr)) return FlagSpace::grassmannian(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(s, m, spgr)) {
    int dim = std::stoi(m[2]);
    if (dim % 2) throw std::invalid_argument("SpGr(k,2n) needs an even ambient dimension, got " + m[2].str());
    return FlagSpace::symplectic(std::stoi(m[1]), dim / 2);
  }
  if (std::regex_match(s, m, fl))
    return FlagSpace::two_step(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
  throw std::invalid_argument("unrecognised space '" + std::string(text) +
                              "' (expected Gr(k,m), SpGr(k,2n) or Fl(j,k;m))");
}

namespace {

struct Options {
  std::string format = "text";
  bool verbose_labels = false;

  std::string lambda, mu, in, out, word, diagram = "half", type = "C", space, kind = "restriction";
  int j = -1, k = -1, n = -1, m = -1;
  std::vector<std::string> identities;
};

LabelString parse_labels(const std::string& text, const char* flag) {
  try {
    return LabelString::parse(text);
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("--") + flag + ": " + e.what());
  }
}

void require(int value, const char* flag) {
  if (value < 0) throw std::invalid_argument(std::string("--") + flag + " is required");
}

std::string show(const LabelString& s, const Options& o) { return o.verbose_labels ? s.verbose() : s.compact(); }

void print_expansion(const ExpansionResult& e, const Json& input, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << expansion_to_json(e, input, o.verbose_labels).dump(2) << '\n';
    return;
  }
  for (const auto& [nu, c] : e.coefficients) out << show(nu, o) << " : " << c << '\n';
}

int print_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    out << r.subject << ": " << r.checked << " checked, " << r.failed << " failed\n";
    if (r.first_failure) out << "first failure: " << *r.first_failure << '\n';
  }
  return r.passed() ? kOk : kCheckFailed;
}

std::vector<int> parse_word(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream is(spaced);
  std::vector<int> word;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) throw std::invalid_argument("--word: bad letter '" + tok + "'");
    word.push_back(v);
  }
  return word;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  require(o.k, "k");
  require(o.n, "n");
  LabelString lambda = parse_labels(o.lambda, "lambda");
  ExpansionResult e = restrict_to_spgr(lambda, o.k, o.n);
  print_expansion(e, Json{{"lambda", show(lambda, o)}, {"k", o.k}, {"n", o.n}}, o, out);
  return kOk;
}

int cmd_product(const Options& o, std::ostream& out) {
  require(o.n, "n");
  LabelString lambda = parse_labels(o.lambda, "lambda");
  LabelString mu = parse_labels(o.mu, "mu");
  ExpansionResult e = two_step_product(lambda, mu, o.n);
  print_expansion(e, Json{{"lambda", show(lambda, o)}, {"mu", show(mu, o)}, {"n", o.n}}, o, out);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require(o.n, "n");
  ScatteringDiagram d;
  if (o.diagram == "triangle") d = build_triangle_diagram(o.n);
  else if (o.diagram == "half") d = build_half_diagram(o.n);
  else d = build_wiring_diagram(parse_word(o.word), o.type == "A" ? WeylType::A : WeylType::C, o.n);

  std::optional<LabelString> nw, south;
  if (!o.out.empty()) nw = parse_labels(o.out, "out");
  if (!o.in.empty()) south = parse_labels(o.in, "in");
  std::vector<Labeling> found = enumerate_labelings(d, nw, south);

  if (o.format == "json") {
    Json doc;
    doc["diagram"] = o.diagram;
    doc["n"] = o.n;
    Json rows = Json::array();
    for (const Labeling& l : found) {
      Json row;
      row["in"] = show(labeling_inputs(d, l), o);
      row["out"] = show(labeling_outputs(d, l), o);
      Json edges = Json::array();
      for (Label x : l.edge_labels) edges.push_back(std::string(token(x)));
      row["edges"] = std::move(edges);
      row["fugacity"] = polynomial_to_json(l.fugacity);
      rows.push_back(std::move(row));
    }
    doc["labelings"] = std::move(rows);
    doc["count"] = found.size();
    out << doc.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    out << "# labeling " << i + 1 << " in=" << show(labeling_inputs(d, found[i]), o)
        << " out=" << show(labeling_outputs(d, found[i]), o) << '\n'
        << dump_labeling(d, found[i]) << '\n';
  }
  out << found.size() << " labelings\n";
  return kOk;
}

int cmd_restriction_at_point(const Options& o, std::ostream& out) {
  FlagSpace space = parse_space(o.space);
  LabelString lambda = parse_labels(o.lambda, "lambda");
  LabelString mu = parse_labels(o.mu, "mu");
  Polynomial p = restriction(lambda, mu, space);
  if (o.format == "json") {
    Json doc;
    doc["space"] = space.name();
    doc["lambda"] = show(lambda, o);
    doc["mu"] = show(mu, o);
    doc["restriction"] = polynomial_to_json(p);
    out << doc.dump(2) << '\n';
  } else {
    out << p << '\n';
  }
  return kOk;
}

int cmd_verify_identities(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Identity> ids;
  if (o.identities.empty()) ids = all_identities();
  for (const std::string& name : o.identities) {
    auto id = identity_from_name(name);
    if (!id) throw std::invalid_argument("--identity: unknown identity '" + name + "'");
    ids.push_back(*id);
  }
  std::size_t held = 0;
  Json rows = Json::object();
  for (Identity id : ids) {
    bool ok = verify_identity(id);
    held += ok;
    rows[std::string(identity_name(id))] = ok;
    if (!ok) err << "identity " << identity_name(id) << " fails\n";
  }
  if (o.format == "json") {
    out << Json{{"identities", rows}, {"checked", ids.size()}, {"failed", ids.size() - held}}.dump(2) << '\n';
  } else {
    out << held << '/' << ids.size() << " identities hold\n";
  }
  return held == ids.size() ? kOk : kCheckFailed;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  require(o.k, "k");
  require(o.n, "n");
  if (o.kind == "restriction") return print_report(crosscheck_restriction(o.k, o.n), o, out);
  require(o.j, "j");
  return print_report(crosscheck_product(o.j, o.k, o.n), o, out);
}

int cmd_duality(const Options& o, std::ostream& out) {
  require(o.k, "k");
  require(o.m, "m");
  return print_report(duality_check(o.k, o.m), o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equivariant Schubert calculus by puzzles and scattering diagrams", "puzzlecalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose-labels", o.verbose_labels, "Write labels as comma-separated tokens (0,10,1)");

  auto* restrict = app.add_subcommand("restrict", "Expand the pullback of S_lambda from Gr(k,2n) to SpGr(k,2n)");
  restrict->add_option("--lambda", o.lambda, "0/1 string of length 2n")->required();
  restrict->add_option("--k", o.k, "Subspace dimension")->required();
  restrict->add_option("--n", o.n, "Half the ambient dimension")->required();

  auto* product = app.add_subcommand("product", "Expand pi_j^*(S_lambda) pi_k^*(S_mu) on Fl(j,k;n)");
  product->add_option("--lambda", o.lambda, "0/1 string with j zeros")->required();
  product->add_option("--mu", o.mu, "0/1 string with k zeros")->required();
  product->add_option("--n", o.n, "Ambient dimension")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List labelings of a scattering diagram with fugacities");
  enumerate->add_option("--diagram", o.diagram, "triangle, half or wiring")
      ->check(CLI::IsMember({"triangle", "half", "wiring"}));
  enumerate->add_option("--n", o.n, "Size (strand count for wiring diagrams)")->required();
  enumerate->add_option("--out", o.out, "Output boundary string (free if omitted)");
  enumerate->add_option("--in", o.in, "Input boundary string (free if omitted)");
  enumerate->add_option("--word", o.word, "Wiring word, e.g. \"2 3 1\"");
  enumerate->add_option("--type", o.type, "Wiring type A or C")->check(CLI::IsMember({"A", "C"}));

  auto* at_point = app.add_subcommand("restriction-at-point", "Restriction of S_lambda to the fixed point mu");
  at_point->add_option("--space", o.space, "Gr(k,m), SpGr(k,2n) or Fl(j,k;m)")->required();
  at_point->add_option("--lambda", o.lambda, "Class index")->required();
  at_point->add_option("--mu", o.mu, "Fixed point")->required();

  auto* identities = app.add_subcommand("verify-identities", "Check the diagram-move identities exactly");
  identities->add_option("--identity", o.identities, "Restrict to named identities");

  auto* crosscheck = app.add_subcommand("crosscheck", "Fixed-point cross-validation");
  crosscheck->add_option("--kind", o.kind, "restriction or product")
      ->check(CLI::IsMember({"restriction", "product"}));
  crosscheck->add_option("--j", o.j, "Smaller dimension (product)");
  crosscheck->add_option("--k", o.k, "Subspace dimension")->required();
  crosscheck->add_option("--n", o.n, "Rank")->required();

  auto* duality = app.add_subcommand("duality", "Check c(lambda,mu;nu) = c(mu*,lambda*;nu*) on Gr(k,m)");
  duality->add_option("--k", o.k, "Subspace dimension")->required();
  duality->add_option("--m", o.m, "Ambient dimension")->required();

  std::vector<const char*> argv{"puzzlecalc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*restrict) return cmd_restrict(o, out);
    if (*product) return cmd_product(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*at_point) return cmd_restriction_at_point(o, out);
    if (*identities) return cmd_verify_identities(o, out, err);
    if (*crosscheck) return cmd_crosscheck(o, out);
    if (*duality) return cmd_duality(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInvalidInput;
}

}  // namespace puzzle::cli
