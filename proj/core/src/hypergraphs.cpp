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

#include "revgate/hypergraphs.hpp"

#include <algorithm>
#include <array>
#include <boost/pending/disjoint_sets.hpp>
#include <deque>
#include <map>
#include <numeric>

#include "revgate/error.hpp"
#include "revgate/stabilizer_chain.hpp"

namespace revgate {

namespace {

std::vector<Code> place_values(unsigned q, unsigned n) {
  std::vector<Code> place(n);
  Code p = 1;
  for (unsigned i = n; i-- > 0;) {
    place[i] = p;
    p *= q;
  }
  return place;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : rank_(size), parent_(size), sets_(rank_.data(), parent_.data()) {
    for (std::size_t i = 0; i < size; ++i) sets_.make_set(i);
  }
  void unite(std::size_t a, std::size_t b) { sets_.union_set(a, b); }
  std::size_t find(std::size_t a) { return sets_.find_set(a); }

 private:
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

BigInt edge_group_order(unsigned degree, const std::vector<Permutation>& gens) {
  return StabilizerChain(degree, gens).order();
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "G1" || name == "g1") return GraphKind::G1;
  if (name == "G2" || name == "g2") return GraphKind::G2;
  if (name == "G3" || name == "g3") return GraphKind::G3;
  if (name == "G4" || name == "g4") return GraphKind::G4;
  throw Error("unknown graph '" + name + "' (expected G1, G2, G3 or G4)");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::G1: return "G1";
    case GraphKind::G2: return "G2";
    case GraphKind::G3: return "G3";
    case GraphKind::G4: return "G4";
  }
  return "?";
}

void for_each_edge(GraphKind kind, unsigned q, unsigned n, const std::function<void(std::span<const Code>)>& edge) {
  check_alphabet(q);
  if (n < 1) throw Error("graphs need n >= 1");
  const auto size = static_cast<Code>(table_size(q, n));
  const auto place = place_values(q, n);
  std::vector<Code> x(n);
  for (Code c = 0; c < size; ++c) {
    Code rest = c;
    for (unsigned i = n; i-- > 0;) {
      x[i] = rest % q;
      rest /= q;
    }
    switch (kind) {
      case GraphKind::G1:
        for (unsigned i = 0; i < n; ++i) {
          for (Code b = x[i] + 1; b < q; ++b) {
            const std::array<Code, 2> e{c, c + (b - x[i]) * place[i]};
            edge(e);
          }
        }
        break;
      case GraphKind::G2:
        for (unsigned i = 0; i + 1 < n; ++i) {
          if (x[i] < x[i + 1]) {
            const std::array<Code, 2> e{c, c + (x[i + 1] - x[i]) * place[i] - (x[i + 1] - x[i]) * place[i + 1]};
            edge(e);
          }
        }
        break;
      case GraphKind::G3:
        // c = u a b v with a = x[i], b = x[i+1]
        for (unsigned i = 0; i + 1 < n; ++i) {
          const Code base = c - x[i] * place[i] - x[i + 1] * place[i + 1];
          for (Code s = 0; s < q; ++s) {
            if (s == x[i + 1]) continue;
            for (Code d = 0; d < q; ++d) {
              if (d == x[i]) continue;
              const std::array<Code, 3> e{c, base + x[i] * place[i] + s * place[i + 1],
                                          base + d * place[i] + x[i + 1] * place[i + 1]};
              edge(e);
            }
          }
        }
        break;
      case GraphKind::G4:
        // one hyperedge per orbit, emitted from its smallest member
        for (unsigned i = 0; i + 2 < n; ++i) {
          if (x[i] == x[i + 1] && x[i + 1] == x[i + 2]) continue;
          const Code base = c - x[i] * place[i] - x[i + 1] * place[i + 1] - x[i + 2] * place[i + 2];
          const Code r1 = base + x[i + 1] * place[i] + x[i + 2] * place[i + 1] + x[i] * place[i + 2];
          const Code r2 = base + x[i + 2] * place[i] + x[i] * place[i + 1] + x[i + 1] * place[i + 2];
          if (c < r1 && c < r2) {
            const std::array<Code, 3> e{c, r1, r2};
            edge(e);
          }
        }
        break;
    }
  }
}

ComponentPartition components(GraphKind kind, unsigned q, unsigned n) {
  const auto size = table_size(q, n);
  UnionFind uf(size);
  for_each_edge(kind, q, n, [&](std::span<const Code> e) {
    for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
  });
  std::vector<std::uint32_t> labels(size);
  for (Code c = 0; c < size; ++c) labels[c] = static_cast<std::uint32_t>(uf.find(c));
  return ComponentPartition::from_labels(q, n, labels);
}

SmallHypergraph::SmallHypergraph(unsigned vertices, std::vector<std::vector<unsigned>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ > kMaxVertices) {
    throw ResourceError("hypergraph has " + std::to_string(vertices_) + " vertices, limit is " +
                        std::to_string(kMaxVertices));
  }
  for (const auto& e : edges_) {
    if (e.size() != edges_.front().size()) throw Error("hypergraph edges must all have the same size");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= vertices_) throw Error("edge vertex out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (e[i] == e[j]) throw Error("edge repeats a vertex");
      }
    }
  }
}

std::vector<std::vector<unsigned>> SmallHypergraph::components() const {
  UnionFind uf(vertices_);
  for (const auto& e : edges_) {
    for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
  }
  std::map<std::size_t, std::vector<unsigned>> groups;
  for (unsigned v = 0; v < vertices_; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<unsigned>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeGroupReport swap_group(const SmallHypergraph& h) {
  if (h.edge_size() != 0 && h.edge_size() != 2) throw Error("swap group needs a graph with 2-edges");
  std::vector<Permutation> gens;
  for (const auto& e : h.edges()) gens.push_back(Permutation::from_cycles(h.vertices(), {{e[0], e[1]}}));
  EdgeGroupReport report;
  report.order = edge_group_order(std::max(h.vertices(), 1U), gens);
  report.expected = 1;
  for (const auto& c : h.components()) report.expected *= factorial(static_cast<unsigned>(c.size()));
  return report;
}

bool swap_group_check(const SmallHypergraph& h) { return swap_group(h).holds(); }

EdgeGroupReport cycling_group(const SmallHypergraph& h) {
  if (h.edge_size() != 0 && h.edge_size() != 3) throw Error("cycling group needs a 3-hypergraph");
  std::vector<Permutation> gens;
  for (const auto& e : h.edges()) {
    gens.push_back(Permutation::from_cycles(h.vertices(), {{e[0], e[1], e[2]}}));
    gens.push_back(Permutation::from_cycles(h.vertices(), {{e[0], e[2], e[1]}}));
  }
  EdgeGroupReport report;
  report.order = edge_group_order(std::max(h.vertices(), 1U), gens);
  report.expected = 1;
  for (const auto& c : h.components()) {
    BigInt f = factorial(static_cast<unsigned>(c.size()));
    if (c.size() >= 2) f /= 2;
    report.expected *= f;
  }
  return report;
}

bool cycling_group_check(const SmallHypergraph& h) { return cycling_group(h).holds(); }

Word rotate_consecutive(const Word& w, unsigned k) {
  if (k + 3 > w.size()) throw Error("rotation position out of range");
  auto s = w.symbols();
  s[k] = w[k + 2];
  s[k + 1] = w[k];
  s[k + 2] = w[k + 1];
  return Word(w.q(), std::move(s));
}

std::optional<std::vector<unsigned>> consecutive_3cycle_parity_route(const Word& u, const Word& v) {
  if (u.q() != v.q() || u.size() != v.size()) throw Error("route endpoints must share alphabet and length");
  if (weight(u) != weight(v)) throw Error("route endpoints have different weights");
  // BFS over the words of u's weight class, parents recorded per word.
  std::map<Word, std::pair<Word, unsigned>> parent;
  std::deque<Word> queue{u};
  parent.emplace(u, std::make_pair(u, 0U));
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (w == v) {
      std::vector<unsigned> route;
      for (Word cur = v; cur != u;) {
        const auto& [prev, k] = parent.at(cur);
        route.push_back(k);
        cur = prev;
      }
      std::reverse(route.begin(), route.end());
      return route;
    }
    for (unsigned k = 0; k + 3 <= w.size(); ++k) {
      Word next = rotate_consecutive(w, k);
      if (parent.emplace(next, std::make_pair(w, k)).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace revgate
