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

#include "puzzle/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace puzzle {

// ---------------------------------------------------------------- construction

int ScatteringDiagram::new_edge(Colour colour, Polynomial parameter, int source) {
  edges_.push_back(Edge{colour, std::move(parameter), source, -1});
  return static_cast<int>(edges_.size()) - 1;
}

int ScatteringDiagram::new_vertex(Vertex v) {
  vertices_.push_back(std::move(v));
  return static_cast<int>(vertices_.size()) - 1;
}

void ScatteringDiagram::consume(int edge, int vertex) {
  if (edge < 0 || edge >= static_cast<int>(edges_.size()))
    throw std::invalid_argument("no such edge " + std::to_string(edge));
  if (edges_[edge].target != -1)
    throw std::invalid_argument("edge " + std::to_string(edge) + " already terminated");
  edges_[edge].target = vertex;
}

int ScatteringDiagram::add_input(Colour colour, Polynomial parameter) {
  int v = new_vertex(Vertex{VertexKind::InputPort, {}, {}, {}, std::nullopt,
                            static_cast<int>(inputs_.size())});
  int e = new_edge(colour, std::move(parameter), v);
  vertices_[v].outputs.push_back(e);
  inputs_.push_back(e);
  return e;
}

std::pair<int, int> ScatteringDiagram::add_trivalent(int blue_edge) {
  if (edges_.at(blue_edge).colour != Colour::Blue)
    throw std::invalid_argument("trivalent vertex needs a blue incoming strand");
  Polynomial a = edges_[blue_edge].parameter;
  int v = new_vertex(Vertex{VertexKind::Trivalent, {blue_edge}, {}, a, u_matrix()});
  consume(blue_edge, v);
  int g = new_edge(Colour::Green, a, v);
  int r = new_edge(Colour::Red, a, v);
  vertices_[v].outputs = {g, r};
  return {g, r};
}

std::pair<int, int> ScatteringDiagram::add_crossing(int left_edge, int right_edge) {
  const Edge& l = edges_.at(left_edge);
  const Edge& r = edges_.at(right_edge);
  CrossingKind kind;
  if (l.colour == r.colour) kind = CrossingKind::SameColour;
  else if (l.colour == Colour::Red && r.colour == Colour::Green) kind = CrossingKind::RedGreen;
  else
    throw std::invalid_argument(std::string("no R-matrix for crossing ") +
                                colour_letter(l.colour) + " over " + colour_letter(r.colour));
  Polynomial argument = l.parameter - r.parameter;
  Colour lc = l.colour, rc = r.colour;
  Polynomial lp = l.parameter, rp = r.parameter;
  int v = new_vertex(Vertex{VertexKind::Crossing, {left_edge, right_edge}, {}, argument,
                            r_matrix(kind, argument)});
  consume(left_edge, v);
  consume(right_edge, v);
  int out_left = new_edge(rc, std::move(rp), v);
  int out_right = new_edge(lc, std::move(lp), v);
  vertices_[v].outputs = {out_left, out_right};
  return {out_left, out_right};
}

int ScatteringDiagram::add_bounce(int edge) {
  const Edge& e = edges_.at(edge);
  BounceKind kind;
  Colour out_colour;
  if (e.colour == Colour::Red) {
    kind = BounceKind::KR;
    out_colour = Colour::Green;
  } else if (e.colour == Colour::Blue) {
    kind = BounceKind::KB;
    out_colour = Colour::Blue;
  } else {
    throw std::invalid_argument("only red and blue strands bounce off the wall");
  }
  Polynomial a = e.parameter;
  int v = new_vertex(Vertex{VertexKind::Bounce, {edge}, {}, a, k_matrix(kind, a)});
  consume(edge, v);
  int out = new_edge(out_colour, -a, v);
  vertices_[v].outputs = {out};
  return out;
}

void ScatteringDiagram::add_output(int edge, int reading_position) {
  if (reading_position < 0) throw std::invalid_argument("negative output position");
  int v = new_vertex(Vertex{VertexKind::OutputPort, {edge}, {}, {}, std::nullopt, reading_position});
  consume(edge, v);
  if (static_cast<int>(outputs_.size()) <= reading_position) outputs_.resize(reading_position + 1, -1);
  if (outputs_[reading_position] != -1)
    throw std::invalid_argument("output position " + std::to_string(reading_position) + " reused");
  outputs_[reading_position] = edge;
}

std::size_t ScatteringDiagram::count(VertexKind kind) const {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                [&](const Vertex& v) { return v.kind == kind; }));
}

std::size_t ScatteringDiagram::output_count() const { return outputs_.size(); }

// ---------------------------------------------------------------- families

ScatteringDiagram build_triangle_diagram(int n) {
  if (n < 1) throw std::invalid_argument("triangle diagram needs n >= 1");
  ScatteringDiagram d;
  std::vector<int> blue(n + 1), green(n + 1), red(n + 1);
  for (int i = 1; i <= n; ++i) blue[i] = d.add_input(Colour::Blue, Polynomial::y(i));
  for (int i = 1; i <= n; ++i) std::tie(green[i], red[i]) = d.add_trivalent(blue[i]);
  d.add_output(green[1], 0);
  if (n == 1) d.add_output(red[1], 1);
  // r_i meets g_j at height j - i.
  for (int h = 1; h < n; ++h) {
    for (int i = 1; i + h <= n; ++i) {
      int j = i + h;
      auto [g, r] = d.add_crossing(red[i], green[j]);
      green[j] = g;
      red[i] = r;
      if (i == 1) d.add_output(green[j], j - 1);
      if (j == n) d.add_output(red[i], n + i - 1);
    }
  }
  if (n > 1) d.add_output(red[n], 2 * n - 1);
  return d;
}

ScatteringDiagram build_half_diagram(int n) {
  if (n < 1) throw std::invalid_argument("half diagram needs n >= 1");
  if (n > Variable::kMaxY) throw std::invalid_argument("half diagram too large for y-variables");
  ScatteringDiagram d;
  std::vector<int> blue(n + 1), green(n + 1), red(n + 1), bounced(n + 1, -1);
  for (int i = 1; i <= n; ++i) blue[i] = d.add_input(Colour::Blue, Polynomial::y(i));
  for (int i = 1; i <= n; ++i) std::tie(green[i], red[i]) = d.add_trivalent(blue[i]);
  // Output reading positions: g_i -> i - 1, ĝ_i -> 2n - i.
  // Events by height in the unfolded triangle of size 2n: r_i x g_j at j - i,
  // r_i x ĝ_j at 2n + 1 - i - j, the bounce of r_i at 2n + 1 - 2i.
  d.add_output(green[1], 0);
  for (int h = 1; h <= 2 * n - 1; ++h) {
    for (int i = 1; i <= n; ++i) {
      int j = i + h;
      if (j <= n) {
        auto [g, r] = d.add_crossing(red[i], green[j]);
        green[j] = g;
        red[i] = r;
        if (i == 1) d.add_output(green[j], j - 1);
      }
      int jb = 2 * n + 1 - i - h;
      if (jb > i && jb <= n) {
        auto [g, r] = d.add_crossing(red[i], bounced[jb]);
        bounced[jb] = g;
        red[i] = r;
        if (i == 1) d.add_output(bounced[jb], 2 * n - jb);
      }
      if (2 * n + 1 - 2 * i == h) {
        bounced[i] = d.add_bounce(red[i]);
        if (i == 1) d.add_output(bounced[1], 2 * n - 1);
      }
    }
  }
  return d;
}

ScatteringDiagram build_wiring_diagram(const std::vector<int>& word, WeylType type, int m) {
  if (m < 1) throw std::invalid_argument("wiring diagram needs m >= 1");
  if (m > Variable::kMaxY) throw std::invalid_argument("wiring diagram too large for y-variables");
  const int max_letter = type == WeylType::A ? m - 1 : m;
  for (int q : word)
    if (q < 1 || q > max_letter)
      throw std::invalid_argument("generator index " + std::to_string(q) + " out of range 1.." +
                                  std::to_string(max_letter));

  // Parameters are fixed at the top; push them down through the word.
  std::vector<Polynomial> params;
  for (int i = 1; i <= m; ++i) params.push_back(Polynomial::y(i));
  for (int q : word) {
    if (type == WeylType::C && q == m) params[m - 1] = -params[m - 1];
    else std::swap(params[q - 1], params[q]);
  }

  const Colour colour = type == WeylType::A ? Colour::Green : Colour::Blue;
  ScatteringDiagram d;
  std::vector<int> live;
  for (int p = 0; p < m; ++p) live.push_back(d.add_input(colour, params[p]));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int q = *it;
    if (type == WeylType::C && q == m) {
      live[m - 1] = d.add_bounce(live[m - 1]);
    } else {
      auto [l, r] = d.add_crossing(live[q - 1], live[q]);
      live[q - 1] = l;
      live[q] = r;
    }
  }
  for (int p = 0; p < m; ++p) d.add_output(live[p], p);
  return d;
}

// ---------------------------------------------------------------- contraction

namespace {

int input_code(const std::vector<Label>& labels) {
  int c = 0;
  for (Label l : labels) c = c * 3 + static_cast<int>(l);
  return c;
}

// rows[code of input labels] -> (output labels, weight)
using LocalTable = std::vector<std::vector<std::pair<LabelTuple, Polynomial>>>;

LocalTable local_table(const SparseMap& m) {
  int size = 1;
  for (int i = 0; i < m.in_arity(); ++i) size *= 3;
  LocalTable t(size);
  for (const auto& [key, value] : m.entries()) t[input_code(key.second)].emplace_back(key.first, value);
  return t;
}

void check_lengths(const ScatteringDiagram& d, const LabelString* out, const LabelString& in) {
  if (in.size() != d.input_count())
    throw std::invalid_argument("input string length " + std::to_string(in.size()) +
                                " does not match " + std::to_string(d.input_count()) + " ports");
  if (out && out->size() != d.output_count())
    throw std::invalid_argument("output string length " + std::to_string(out->size()) +
                                " does not match " + std::to_string(d.output_count()) + " ports");
}

// Sweeps the vertices in order keeping a map from labels of the live edges to
// the accumulated weight. With `out` given, output ports filter and retire
// their edge; otherwise the edge stays live (and is never consumed again).
std::map<std::string, Polynomial> contract(const ScatteringDiagram& d, const LabelString* out,
                                           const LabelString& in, std::vector<int>& live) {
  std::map<std::string, Polynomial> states;
  states.emplace(std::string(), Polynomial(1));
  live.clear();
  for (const Vertex& v : d.vertices()) {
    switch (v.kind) {
      case VertexKind::InputPort: {
        char c = static_cast<char>(in[v.port_index]);
        std::map<std::string, Polynomial> next;
        for (auto& [key, value] : states) next.emplace(key + c, std::move(value));
        states = std::move(next);
        live.push_back(v.outputs[0]);
        break;
      }
      case VertexKind::OutputPort: {
        if (!out) break;
        auto pos = std::find(live.begin(), live.end(), v.inputs[0]) - live.begin();
        char want = static_cast<char>((*out)[v.port_index]);
        std::map<std::string, Polynomial> next;
        for (auto& [key, value] : states)
          if (key[pos] == want) next.emplace(key.substr(0, pos) + key.substr(pos + 1), std::move(value));
        states = std::move(next);
        live.erase(live.begin() + pos);
        break;
      }
      default: {
        LocalTable table = local_table(*v.matrix);
        std::vector<std::size_t> positions;
        for (int e : v.inputs)
          positions.push_back(std::find(live.begin(), live.end(), e) - live.begin());
        std::vector<std::size_t> sorted = positions;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t at = sorted.front();

        std::map<std::string, Polynomial> next;
        std::vector<Label> ins(positions.size());
        for (const auto& [key, value] : states) {
          for (std::size_t i = 0; i < positions.size(); ++i) ins[i] = static_cast<Label>(key[positions[i]]);
          const auto& rows = table[input_code(ins)];
          if (rows.empty()) continue;
          std::string base = key;
          for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) base.erase(*it, 1);
          for (const auto& [outs, weight] : rows) {
            std::string nk = base;
            std::string ins_str;
            for (Label l : outs) ins_str.push_back(static_cast<char>(l));
            nk.insert(at, ins_str);
            auto [it, fresh] = next.try_emplace(std::move(nk));
            it->second += value * weight;
          }
        }
        for (auto it = next.begin(); it != next.end();)
          it = it->second.is_zero() ? next.erase(it) : std::next(it);
        states = std::move(next);

        for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) live.erase(live.begin() + *it);
        live.insert(live.begin() + at, v.outputs.begin(), v.outputs.end());
        break;
      }
    }
    if (states.empty()) break;
  }
  return states;
}

}  // namespace

Polynomial evaluate_entry(const ScatteringDiagram& d, const LabelString& out, const LabelString& in) {
  check_lengths(d, &out, in);
  std::vector<int> live;
  auto states = contract(d, &out, in, live);
  auto it = states.find(std::string());
  return it == states.end() ? Polynomial{} : it->second;
}

std::map<LabelString, Polynomial> evaluate_column(const ScatteringDiagram& d, const LabelString& in) {
  check_lengths(d, nullptr, in);
  std::vector<int> live;
  auto states = contract(d, nullptr, in, live);
  std::map<LabelString, Polynomial> column;
  if (states.empty()) return column;
  // Live edges are now exactly the output edges, in some order.
  std::vector<std::size_t> where(d.output_count());
  for (std::size_t p = 0; p < d.output_count(); ++p)
    where[p] = std::find(live.begin(), live.end(), d.output_edges()[p]) - live.begin();
  for (auto& [key, value] : states) {
    std::vector<Label> labels(d.output_count());
    for (std::size_t p = 0; p < labels.size(); ++p) labels[p] = static_cast<Label>(key[where[p]]);
    column.emplace(LabelString(std::move(labels)), std::move(value));
  }
  return column;
}

// ---------------------------------------------------------------- enumeration

std::vector<Labeling> enumerate_labelings(const ScatteringDiagram& d,
                                          const std::optional<LabelString>& out,
                                          const std::optional<LabelString>& in) {
  if (in) check_lengths(d, out ? &*out : nullptr, *in);
  else if (out && out->size() != d.output_count())
    throw std::invalid_argument("output string length does not match the diagram");

  const auto& vertices = d.vertices();
  std::vector<LocalTable> tables(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].matrix) tables[i] = local_table(*vertices[i].matrix);

  std::vector<Labeling> found;
  std::vector<Label> labels(d.edges().size(), Label::Zero);
  std::vector<Polynomial> partial{Polynomial(1)};  // fugacity prefix products

  std::function<void(std::size_t)> visit = [&](std::size_t t) {
    if (t == vertices.size()) {
      found.push_back(Labeling{labels, partial.back()});
      return;
    }
    const Vertex& v = vertices[t];
    switch (v.kind) {
      case VertexKind::InputPort:
        if (in) {
          labels[v.outputs[0]] = (*in)[v.port_index];
          visit(t + 1);
        } else {
          for (Label l : kAllLabels) {
            labels[v.outputs[0]] = l;
            visit(t + 1);
          }
        }
        return;
      case VertexKind::OutputPort:
        if (!out || labels[v.inputs[0]] == (*out)[v.port_index]) visit(t + 1);
        return;
      default: {
        std::vector<Label> ins;
        for (int e : v.inputs) ins.push_back(labels[e]);
        for (const auto& [outs, weight] : tables[t][input_code(ins)]) {
          for (std::size_t i = 0; i < outs.size(); ++i) labels[v.outputs[i]] = outs[i];
          partial.push_back(partial.back() * weight);
          visit(t + 1);
          partial.pop_back();
        }
        return;
      }
    }
  };
  visit(0);
  return found;
}

LabelString labeling_inputs(const ScatteringDiagram& d, const Labeling& l) {
  LabelString s;
  for (int e : d.input_edges()) s.push_back(l.edge_labels[e]);
  return s;
}

LabelString labeling_outputs(const ScatteringDiagram& d, const Labeling& l) {
  LabelString s;
  for (int e : d.output_edges()) s.push_back(l.edge_labels[e]);
  return s;
}

std::vector<Polynomial> local_weights(const ScatteringDiagram& d, const Labeling& l) {
  std::vector<Polynomial> weights;
  for (const Vertex& v : d.vertices()) {
    if (!v.matrix) continue;
    LabelTuple outs, ins;
    for (int e : v.outputs) outs.push_back(l.edge_labels[e]);
    for (int e : v.inputs) ins.push_back(l.edge_labels[e]);
    weights.push_back(v.matrix->entry(outs, ins));
  }
  return weights;
}

BounceCounts bounce_counts(const ScatteringDiagram& d, const Labeling& l) {
  BounceCounts c;
  for (const Vertex& v : d.vertices()) {
    if (v.kind != VertexKind::Bounce || d.edges()[v.inputs[0]].colour != Colour::Red) continue;
    Label in = l.edge_labels[v.inputs[0]], out = l.edge_labels[v.outputs[0]];
    if (in == Label::Zero && out == Label::One) ++c.zero_to_one;
    if (in == Label::One && out == Label::Zero) ++c.one_to_zero;
  }
  return c;
}

std::string dump_labeling(const ScatteringDiagram& d, const Labeling& l) {
  std::ostringstream os;
  for (std::size_t e = 0; e < d.edges().size(); ++e)
    os << e << ' ' << colour_letter(d.edges()[e].colour) << ' ' << d.edges()[e].parameter << ' '
       << token(l.edge_labels[e]) << '\n';
  os << "fugacity: " << l.fugacity << '\n';
  return os.str();
}

}  // namespace puzzle
