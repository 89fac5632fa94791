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

// Exact counts of forbidden substructures ("scores") and their changes under
// a single edge toggle.
//
//   books   spine-labeled: sum over edges uv of C(|N(u) & N(v)|, k)
//   wheels  hub-labeled: sum over hubs h of the (k-1)-cycles in G[N(h)]
//   cliques number of K_s subgraphs (pivot-based clique-tree counting)
//   GR      sum over t-subsets C of colors of the K_s count in the union
//           graph of the colors in C
//
// Every score is zero exactly when the substructure is absent.

#ifndef RAMSEY_COUNTING_H_
#define RAMSEY_COUNTING_H_

#include <cstdint>
#include <vector>

#include "ramsey/graph.h"
#include "ramsey/problem.h"
#include "ramsey/score.h"

namespace ramsey {

enum class Toggle { kAdd, kRemove };

// |N(u) & N(v)| for every pair, kept in sync with a graph under toggles.
class CodegreeCache {
 public:
  CodegreeCache() = default;
  explicit CodegreeCache(const Graph& g);

  int at(int u, int v) const { return codegree_[u * n_ + v]; }

  // Call with g *before* the toggle of uv is applied to it.
  void ApplyToggle(const Graph& g, int u, int v);

  // True when every entry matches a recount on g.
  bool ConsistentWith(const Graph& g) const;

 private:
  void Bump(int a, int b, int by) {
    codegree_[a * n_ + b] += by;
    codegree_[b * n_ + a] += by;
  }

  int n_ = 0;
  std::vector<std::int16_t> codegree_;
};

// ---- books ----

Score CountBooks(const Graph& g, int k);

// Books of g + uv that use the edge uv, whether or not uv is currently in g.
Score BooksThroughEdge(const Graph& g, const CodegreeCache& cache, int u,
                       int v, int k);

// Toggles e in g (updating cache) and returns the change in CountBooks.
// Throws InputError when e does not match the toggle direction and
// InvariantError when the cache is stale (checked in debug builds).
ScoreDelta BookDelta(Graph& g, CodegreeCache& cache, Edge e, Toggle toggle,
                     int k);

// ---- wheels ----

Score CountWheels(const Graph& g, int k);

// Wheels W_k of g + uv that use the edge uv (as a spoke or a rim edge).
Score WheelsThroughEdge(const Graph& g, int u, int v, int k);

// Toggles e in g and returns the change in CountWheels.
ScoreDelta WheelDelta(Graph& g, Edge e, Toggle toggle, int k);

// Number of cycles of length `length` (as edge sets) in G[vertices].
Score CountCyclesIn(const Graph& g, Row vertices, int length);

// ---- cliques ----

Score CountCliques(const Graph& g, int s);

// K_s subgraphs of g containing e; zero when e is not an edge of g.
Score CountCliquesAtEdge(const Graph& g, Edge e, int s);

// K_s subgraphs of g + uv containing uv: the K_{s-2} count in N(u) & N(v).
Score CliquesThroughPair(const Graph& g, int u, int v, int s);

// ---- generalized score ----

// All t-subsets of {1..r} as bit masks (bit c-1 <-> color c), ascending.
std::vector<unsigned> ColorSubsets(int r, int t);

Score GrScore(const MultiColoring& mc, int s, int t);

// Change in GrScore when e is recolored to new_color (!= its color).
ScoreDelta GrDelta(const MultiColoring& mc, Edge e, int new_color, int s,
                   int t);

// The union graphs G_C for every t-subset C, maintained under recoloring.
class UnionGraphs {
 public:
  UnionGraphs() = default;
  UnionGraphs(const MultiColoring& mc, int t);

  const std::vector<unsigned>& masks() const { return masks_; }
  const Graph& graph(std::size_t i) const { return graphs_[i]; }

  Score Total(int s) const;
  ScoreDelta RecolorDelta(int u, int v, int old_color, int new_color,
                          int s) const;
  void Recolor(int u, int v, int old_color, int new_color);

 private:
  std::vector<unsigned> masks_;
  std::vector<Graph> graphs_;
};

// ---- shape dispatch ----

Score CountShape(const Graph& g, const Shape& shape);

// Copies of `shape` in g + uv using uv. `cache` must match g; it is only
// read for books.
Score ShapeThroughEdge(const Graph& g, const CodegreeCache& cache, int u,
                       int v, const Shape& shape);

bool ContainsShape(const Graph& g, const Shape& shape);

// True when some copy of `shape` in g contains vertex x. Used when a vertex
// has just been added to a graph known to be free of the shape.
bool ContainsShapeAtVertex(const Graph& g, int x, const Shape& shape);

}  // namespace ramsey

#endif  // RAMSEY_COUNTING_H_
