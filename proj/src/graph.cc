// Copyright 2026 The Ramsey Witness Authors
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

#include "ramsey/graph.h"

#include <cmath>

#include "ramsey/errors.h"

namespace ramsey {

Edge EdgeAt(int index) {
  int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * index)) / 2.0);
  while (NumPairs(v) > index) --v;
  while (NumPairs(v + 1) <= index) ++v;
  return {index - NumPairs(v), v};
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapabilityError("graph order " + std::to_string(n) +
                          " outside supported range [0, 64]");
  }
}

void Graph::AddEdge(int u, int v) {
  rows_[u] |= Bit(v);
  rows_[v] |= Bit(u);
}

void Graph::RemoveEdge(int u, int v) {
  rows_[u] &= ~Bit(v);
  rows_[v] &= ~Bit(u);
}

void Graph::SetEdge(int u, int v, bool present) {
  if (present) {
    AddEdge(u, v);
  } else {
    RemoveEdge(u, v);
  }
}

void Graph::ToggleEdge(int u, int v) {
  rows_[u] ^= Bit(v);
  rows_[v] ^= Bit(u);
}

int Graph::NumEdges() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += Degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  for (int v = 1; v < n_; ++v) {
    ForEachBit(rows_[v] & LowMask(v), [&](int u) { edges.push_back({u, v}); });
  }
  return edges;
}

Graph Complement(const Graph& g) {
  Graph c(g.order());
  const Row all = g.vertex_mask();
  for (int u = 0; u < g.order(); ++u) {
    ForEachBit(~g.row(u) & all & ~Bit(u) & ~LowMask(u + 1),
               [&](int v) { c.AddEdge(u, v); });
  }
  return c;
}

Graph Relabel(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    ForEachBit(g.row(u) & ~LowMask(u + 1),
               [&](int v) { out.AddEdge(perm[u], perm[v]); });
  }
  return out;
}

Graph InducedSubgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.HasEdge(vertices[i], vertices[j])) out.AddEdge(i, j);
    }
  }
  return out;
}

Graph CompleteGraph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) g.AddEdge(u, v);
  }
  return g;
}

Graph CycleGraph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
  return g;
}

Graph PathGraph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
  return g;
}

Graph WheelGraph(int k) {
  Graph g(k);
  const int rim = k - 1;
  for (int i = 0; i < rim; ++i) {
    g.AddEdge(0, 1 + i);
    g.AddEdge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

Graph BookGraph(int k) {
  Graph g(k + 2);
  g.AddEdge(0, 1);
  for (int p = 2; p < k + 2; ++p) {
    g.AddEdge(0, p);
    g.AddEdge(1, p);
  }
  return g;
}

MultiColoring::MultiColoring(int n, int r, int fill)
    : n_(n), r_(r), colors_(NumPairs(n), static_cast<std::uint8_t>(fill)) {
  if (r < 1 || r > kMaxColors) {
    throw CapabilityError("color count " + std::to_string(r) +
                          " outside supported range [1, 8]");
  }
}

Graph MultiColoring::ColorClass(int c) const {
  return UnionGraph(1u << (c - 1));
}

Graph MultiColoring::UnionGraph(unsigned color_set) const {
  Graph g(n_);
  int index = 0;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      if ((color_set >> (colors_[index] - 1)) & 1u) g.AddEdge(u, v);
    }
  }
  return g;
}

MultiColoring TwoColoringOf(const Graph& g) {
  MultiColoring mc(g.order(), 2, 2);
  for (const Edge& e : g.Edges()) mc.set_color(e.u, e.v, 1);
  return mc;
}

MultiColoring Relabel(const MultiColoring& mc, std::span<const int> perm) {
  MultiColoring out(mc.order(), mc.num_colors());
  for (int v = 1; v < mc.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      out.set_color(perm[u], perm[v], mc.color(u, v));
    }
  }
  return out;
}

MultiColoring PermuteColors(const MultiColoring& mc,
                            std::span<const int> sigma) {
  MultiColoring out(mc.order(), mc.num_colors());
  for (int i = 0; i < NumPairs(mc.order()); ++i) {
    out.set_color_at(i, sigma[mc.color_at(i) - 1]);
  }
  return out;
}

MultiColoring InducedSubcoloring(const MultiColoring& mc,
                                 std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  MultiColoring out(k, mc.num_colors());
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      out.set_color(i, j, mc.color(vertices[i], vertices[j]));
    }
  }
  return out;
}

}  // namespace ramsey
