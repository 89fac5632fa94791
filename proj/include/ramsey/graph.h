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

// Dense graph and edge-coloring value types. A Graph keeps one 64-bit
// adjacency row per vertex; a MultiColoring keeps one color byte per edge of
// K_n, indexed in graph6 column order (0,1), (0,2), (1,2), (0,3), ...

#ifndef RAMSEY_GRAPH_H_
#define RAMSEY_GRAPH_H_

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using Row = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxColors = 8;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Index of the pair {u, v} (u != v) in column order.
constexpr int EdgeIndex(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

constexpr int NumPairs(int n) { return n * (n - 1) / 2; }

// Inverse of EdgeIndex.
Edge EdgeAt(int index);

constexpr Row Bit(int v) { return Row{1} << v; }

constexpr Row LowMask(int n) { return n >= 64 ? ~Row{0} : Bit(n) - 1; }

// Calls fn(v) for every set bit v of `bits`, lowest first.
template <typename Fn>
inline void ForEachBit(Row bits, Fn&& fn) {
  while (bits != 0) {
    const int v = std::countr_zero(bits);
    bits &= bits - 1;
    fn(v);
  }
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  Row row(int v) const { return rows_[v]; }
  Row vertex_mask() const { return LowMask(n_); }

  bool HasEdge(int u, int v) const { return (rows_[u] >> v) & 1; }
  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);
  void SetEdge(int u, int v, bool present);
  void ToggleEdge(int u, int v);

  int Degree(int v) const { return std::popcount(rows_[v]); }
  int NumEdges() const;
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

Graph Complement(const Graph& g);

// perm[v] is the new label of vertex v.
Graph Relabel(const Graph& g, std::span<const int> perm);

// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph InducedSubgraph(const Graph& g, std::span<const int> vertices);

Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph PathGraph(int n);
// W_k: hub 0 joined to a cycle on vertices 1..k-1.
Graph WheelGraph(int k);
// B_k: spine 0-1, pages 2..k+1.
Graph BookGraph(int k);

class MultiColoring {
 public:
  MultiColoring() = default;
  // Every edge starts with `fill`.
  MultiColoring(int n, int r, int fill = 1);

  int order() const { return n_; }
  int num_colors() const { return r_; }

  int color(int u, int v) const { return colors_[EdgeIndex(u, v)]; }
  void set_color(int u, int v, int c) {
    colors_[EdgeIndex(u, v)] = static_cast<std::uint8_t>(c);
  }
  int color_at(int edge_index) const { return colors_[edge_index]; }
  void set_color_at(int edge_index, int c) {
    colors_[edge_index] = static_cast<std::uint8_t>(c);
  }
  std::span<const std::uint8_t> colors() const { return colors_; }

  // Edges of color c as a Graph. Requires n <= 64.
  Graph ColorClass(int c) const;
  // Edges whose color bit (1 << (color - 1)) is set in `color_set`.
  Graph UnionGraph(unsigned color_set) const;

  friend bool operator==(const MultiColoring&,
                         const MultiColoring&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::uint8_t> colors_;
};

// Color 1 = edges of g, color 2 = non-edges.
MultiColoring TwoColoringOf(const Graph& g);

MultiColoring Relabel(const MultiColoring& mc, std::span<const int> perm);

// sigma[c - 1] is the new color of color c.
MultiColoring PermuteColors(const MultiColoring& mc, std::span<const int> sigma);

MultiColoring InducedSubcoloring(const MultiColoring& mc,
                                 std::span<const int> vertices);

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_H_
