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

#ifndef PUZZLE_DIAGRAM_HPP
#define PUZZLE_DIAGRAM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puzzle/labels.hpp"
#include "puzzle/poly.hpp"
#include "puzzle/tensor.hpp"

namespace puzzle {

enum class WeylType { A, C };

enum class VertexKind { InputPort, OutputPort, Crossing, Bounce, Trivalent };

struct Edge {
  Colour colour;
  Polynomial parameter;
  int source = -1;
  int target = -1;
};

struct Vertex {
  VertexKind kind;
  std::vector<int> inputs;   // edge ids, left to right
  std::vector<int> outputs;  // edge ids, left to right
  Polynomial argument;       // crossing a - b, or bounce incoming parameter
  std::optional<SparseMap> matrix;  // absent for ports
  int port_index = -1;              // reading position, for ports
};

/// A scattering diagram: an acyclic network of crossings (R), wall bounces (K)
/// and trivalent vertices (U) joined by coloured, parameter-carrying edges.
/// Vertices are stored in a topological order (the order they were added).
class ScatteringDiagram {
 public:
  /// New boundary strand entering from below; returns its edge id.
  int add_input(Colour colour, Polynomial parameter);
  /// Splits a blue strand into (green, red), both carrying its parameter.
  std::pair<int, int> add_trivalent(int blue_edge);
  /// Crosses two strands; returns the (left, right) outgoing edges. The left
  /// outgoing edge continues the right incoming strand and vice versa. Same
  /// colours use R_CC, red-left/green-right uses R_RG; other pairs are rejected.
  std::pair<int, int> add_crossing(int left_edge, int right_edge);
  /// Wall bounce: red -> green via K_R, blue -> blue via K_B. The parameter is negated.
  int add_bounce(int edge);
  /// Terminates an edge at an output port with the given reading position.
  void add_output(int edge, int reading_position);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Input edges in reading order.
  const std::vector<int>& input_edges() const { return inputs_; }
  /// Output edges in reading order (-1 for unassigned positions).
  const std::vector<int>& output_edges() const { return outputs_; }

  std::size_t count(VertexKind kind) const;
  std::size_t input_count() const { return inputs_.size(); }
  std::size_t output_count() const;

 private:
  int new_edge(Colour colour, Polynomial parameter, int source);
  int new_vertex(Vertex v);
  void consume(int edge, int vertex);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
};

/// Full puzzle triangle of size n: blue inputs y_1..y_n on the South side,
/// outputs g_1..g_n (Northwest, bottom to top) followed by r_1..r_n
/// (Northeast, top to bottom). Output strings are lambda ++ mu.
ScatteringDiagram build_triangle_diagram(int n);

/// Left half of a self-dual puzzle of size 2n: blue inputs y_1..y_n, 2n green
/// outputs g_1..g_n, ĝ_n..ĝ_1 with parameters y_1..y_n, -y_n..-y_1.
ScatteringDiagram build_half_diagram(int n);

/// Wiring diagram of a word in simple reflections (letters listed top to
/// bottom) on m strands with top parameters y_1..y_m. Type A uses green
/// strands and R_GG; type C uses blue strands, R_BB, and K_B for letter m.
ScatteringDiagram build_wiring_diagram(const std::vector<int>& word, WeylType type, int m);

/// Matrix entry (out, in) of the diagram's linear map, by sparse contraction.
Polynomial evaluate_entry(const ScatteringDiagram& d, const LabelString& out,
                          const LabelString& in);

/// All nonzero entries of the column for `in`, keyed by output string.
std::map<LabelString, Polynomial> evaluate_column(const ScatteringDiagram& d,
                                                  const LabelString& in);

struct Labeling {
  std::vector<Label> edge_labels;
  Polynomial fugacity;
};

/// Every labeling with all vertex weights nonzero matching the boundary
/// constraints (nullopt = free), in depth-first order along the vertex order.
std::vector<Labeling> enumerate_labelings(const ScatteringDiagram& d,
                                          const std::optional<LabelString>& out,
                                          const std::optional<LabelString>& in);

LabelString labeling_inputs(const ScatteringDiagram& d, const Labeling& l);
LabelString labeling_outputs(const ScatteringDiagram& d, const Labeling& l);

/// Weight of each non-port vertex under the labeling, in vertex order.
std::vector<Polynomial> local_weights(const ScatteringDiagram& d, const Labeling& l);

/// K_R usage: how many bounces took red 0 -> green 1 and red 1 -> green 0.
struct BounceCounts {
  int zero_to_one = 0;
  int one_to_zero = 0;
};
BounceCounts bounce_counts(const ScatteringDiagram& d, const Labeling& l);

/// `edgeid colour parameter label` lines followed by `fugacity: <poly>`.
std::string dump_labeling(const ScatteringDiagram& d, const Labeling& l);

}  // namespace puzzle

#endif  // PUZZLE_DIAGRAM_HPP
