// Copyright 2026 The revgate Authors
//
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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revgate/bigint.hpp"
#include "revgate/gate_perm.hpp"

namespace revgate {

/// G1: Hamming distance one. G2: adjacent symbol swaps (uabv, ubav).
/// G3: hyperedges (uabv, uacv, udbv), a != d, b != c.
/// G4: rotations of three consecutive symbols (uabcv, ubcav, ucabv).
enum class GraphKind { G1, G2, G3, G4 };

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

/// Calls `edge` once per (hyper)edge of the graph on A^n, with its words'
/// codes. Edges with repeated vertices are skipped.
void for_each_edge(GraphKind kind, unsigned q, unsigned n, const std::function<void(std::span<const Code>)>& edge);

/// Connected components (of the underlying graph for 3-hypergraphs),
/// numbered by smallest member.
ComponentPartition components(GraphKind kind, unsigned q, unsigned n);

/// A hypergraph on vertices 0..vertices-1 whose edges all have the same size.
class SmallHypergraph {
 public:
  static constexpr unsigned kMaxVertices = 12;

  SmallHypergraph(unsigned vertices, std::vector<std::vector<unsigned>> edges);

  unsigned vertices() const { return vertices_; }
  const std::vector<std::vector<unsigned>>& edges() const { return edges_; }
  /// Edge size, 0 when there are no edges.
  unsigned edge_size() const { return edges_.empty() ? 0 : static_cast<unsigned>(edges_.front().size()); }

  /// Vertex sets of the connected components, by smallest vertex.
  std::vector<std::vector<unsigned>> components() const;

 private:
  unsigned vertices_;
  std::vector<std::vector<unsigned>> edges_;
};

struct EdgeGroupReport {
  BigInt order;     ///< order of the group generated by the edge permutations
  BigInt expected;  ///< product of Sym (swaps) or Alt (3-cycles) over the components
  bool holds() const { return order == expected; }
};

/// Group generated by the transpositions of a 2-graph.
EdgeGroupReport swap_group(const SmallHypergraph& h);
bool swap_group_check(const SmallHypergraph& h);

/// Group generated by both 3-cycles of each edge of a 3-hypergraph.
EdgeGroupReport cycling_group(const SmallHypergraph& h);
bool cycling_group_check(const SmallHypergraph& h);

/// Wire rotation on positions k, k+1, k+2: (x_k, x_k+1, x_k+2) -> (x_k+2, x_k, x_k+1).
Word rotate_consecutive(const Word& w, unsigned k);

/// Shortest sequence of consecutive rotations (their positions k, applied in
/// order) carrying u to v, or nullopt when u and v lie in different G4
/// components. Throws Error when the weights differ.
std::optional<std::vector<unsigned>> consecutive_3cycle_parity_route(const Word& u, const Word& v);

}  // namespace revgate
