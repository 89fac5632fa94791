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

#include "ramsey/counting.h"

#include <bit>
#include <cassert>

#include "ramsey/errors.h"

namespace ramsey {
namespace {

Score Choose(int m, int k) { return Score(Binomial(m, k)); }

// Simple paths that start at `from`, continue through vertices of `allowed`,
// and have `remaining` more vertices to place; the last vertex must be
// adjacent to `target`. With kStopAtFirst the count is capped at 1.
template <bool kStopAtFirst>
u128 CountClosingPaths(const Graph& g, int from, Row allowed, int remaining,
                       int target) {
  if (remaining == 0) return g.HasEdge(from, target) ? 1 : 0;
  u128 total = 0;
  Row next = g.row(from) & allowed;
  while (next != 0) {
    const int w = std::countr_zero(next);
    next &= next - 1;
    total += CountClosingPaths<kStopAtFirst>(g, w, allowed & ~Bit(w),
                                             remaining - 1, target);
    if (kStopAtFirst && total != 0) return total;
  }
  return total;
}

// Cycles of `length` vertices in G[vertices]. Each cycle is traced from its
// smallest vertex in both directions, hence the halving.
template <bool kStopAtFirst>
u128 CyclesIn(const Graph& g, Row vertices, int length) {
  u128 twice = 0;
  ForEachBit(vertices, [&](int start) {
    if (kStopAtFirst && twice != 0) return;
    const Row higher = vertices & ~LowMask(start + 1);
    twice += CountClosingPaths<kStopAtFirst>(g, start, higher, length - 1,
                                             start);
  });
  return kStopAtFirst ? (twice != 0) : twice / 2;
}

// Cycles of `length` vertices through v whose other vertices lie in `others`
// (which must not contain v).
template <bool kStopAtFirst>
u128 CyclesThrough(const Graph& g, int v, Row others, int length) {
  const u128 directed =
      CountClosingPaths<kStopAtFirst>(g, v, others, length - 1, v);
  return kStopAtFirst ? (directed != 0) : directed / 2;
}

// Paths u -> ... -> v with exactly `length` vertices whose interior lies in
// `interior`.
template <bool kStopAtFirst>
u128 PathsBetween(const Graph& g, int u, int v, Row interior, int length) {
  // The last interior vertex must be adjacent to v; CountClosingPaths checks
  // adjacency to its target after placing `remaining` vertices.
  return CountClosingPaths<kStopAtFirst>(g, u, interior, length - 2, v);
}

// Pivot-based clique-tree counting. `held` vertices are in every clique of
// this subtree; each of the `pivots` vertices may be in or out.
u128 PivotCount(const Graph& g, Row candidates, int held, int pivots, int s) {
  if (held > s) return 0;
  if (held + pivots + std::popcount(candidates) < s) return 0;
  if (candidates == 0) return Binomial(pivots, s - held);
  int pivot = -1;
  int best = -1;
  ForEachBit(candidates, [&](int p) {
    const int d = std::popcount(g.row(p) & candidates);
    if (d > best) {
      best = d;
      pivot = p;
    }
  });
  u128 total = 0;
  Row remaining = candidates;
  ForEachBit(candidates & ~g.row(pivot), [&](int v) {
    const Row next = remaining & g.row(v);
    if (v == pivot) {
      total += PivotCount(g, next, held, pivots + 1, s);
    } else {
      total += PivotCount(g, next, held + 1, pivots, s);
    }
    remaining &= ~Bit(v);
  });
  return total;
}

bool HasCliqueIn(const Graph& g, Row candidates, int need) {
  if (need <= 0) return true;
  if (std::popcount(candidates) < need) return false;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (HasCliqueIn(g, candidates & g.row(v), need - 1)) return true;
    if (std::popcount(candidates) < need) return false;
  }
  return false;
}

void CheckEdgeState(const Graph& g, Edge e, Toggle toggle) {
  const bool present = g.HasEdge(e.u, e.v);
  if (e.u == e.v || (toggle == Toggle::kAdd) == present) {
    throw InputError("edge toggle does not match the graph");
  }
}

}  // namespace

CodegreeCache::CodegreeCache(const Graph& g)
    : n_(g.order()), codegree_(static_cast<std::size_t>(n_) * n_) {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      codegree_[u * n_ + v] =
          u == v ? 0 : static_cast<std::int16_t>(std::popcount(g.row(u) & g.row(v)));
    }
  }
}

void CodegreeCache::ApplyToggle(const Graph& g, int u, int v) {
  const int by = g.HasEdge(u, v) ? -1 : +1;
  // v enters/leaves N(u): pairs (v, w) with w in N(u) change, and vice versa.
  ForEachBit(g.row(u) & ~Bit(v), [&](int w) { Bump(v, w, by); });
  ForEachBit(g.row(v) & ~Bit(u), [&](int w) { Bump(u, w, by); });
}

bool CodegreeCache::ConsistentWith(const Graph& g) const {
  if (g.order() != n_) return false;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && at(u, v) != std::popcount(g.row(u) & g.row(v))) {
        return false;
      }
    }
  }
  return true;
}

Score CountBooks(const Graph& g, int k) {
  Score total;
  for (int v = 1; v < g.order(); ++v) {
    ForEachBit(g.row(v) & LowMask(v), [&](int u) {
      total += Choose(std::popcount(g.row(u) & g.row(v)), k);
    });
  }
  return total;
}

Score BooksThroughEdge(const Graph& g, const CodegreeCache& cache, int u,
                       int v, int k) {
  // With uv absent: spine uv contributes C(cd(u,v), k); for each common
  // neighbour w, uv is a page edge of spines uw and vw, adding v (resp. u)
  // to their page sets.
  const int present = g.HasEdge(u, v) ? 1 : 0;
  Score total = Choose(cache.at(u, v), k);
  ForEachBit(g.row(u) & g.row(v), [&](int w) {
    total += Choose(cache.at(u, w) - present, k - 1);
    total += Choose(cache.at(v, w) - present, k - 1);
  });
  return total;
}

ScoreDelta BookDelta(Graph& g, CodegreeCache& cache, Edge e, Toggle toggle,
                     int k) {
  CheckEdgeState(g, e, toggle);
  assert(cache.ConsistentWith(g));
  const Score through = BooksThroughEdge(g, cache, e.u, e.v, k);
  cache.ApplyToggle(g, e.u, e.v);
  g.ToggleEdge(e.u, e.v);
  const ScoreDelta magnitude = through.Minus(Score());
  return toggle == Toggle::kAdd ? magnitude : -magnitude;
}

Score CountCyclesIn(const Graph& g, Row vertices, int length) {
  return CyclesIn<false>(g, vertices, length);
}

Score CountWheels(const Graph& g, int k) {
  Score total;
  for (int h = 0; h < g.order(); ++h) {
    total += CyclesIn<false>(g, g.row(h), k - 1);
  }
  return total;
}

Score WheelsThroughEdge(const Graph& g, int u, int v, int k) {
  const int rim = k - 1;
  const Row not_uv = ~(Bit(u) | Bit(v));
  // Spoke: hub u with v on the rim, or hub v with u on the rim.
  Score total = CyclesThrough<false>(g, v, g.row(u) & not_uv, rim);
  total += CyclesThrough<false>(g, u, g.row(v) & not_uv, rim);
  // Rim edge: any common neighbour is a hub; close uv with a u..v path.
  ForEachBit(g.row(u) & g.row(v), [&](int h) {
    total += PathsBetween<false>(g, u, v, g.row(h) & not_uv, rim);
  });
  return total;
}

ScoreDelta WheelDelta(Graph& g, Edge e, Toggle toggle, int k) {
  CheckEdgeState(g, e, toggle);
  const ScoreDelta magnitude = WheelsThroughEdge(g, e.u, e.v, k).Minus(Score());
  g.ToggleEdge(e.u, e.v);
  return toggle == Toggle::kAdd ? magnitude : -magnitude;
}

Score CountCliques(const Graph& g, int s) {
  if (s <= 0) return Score(1);
  return PivotCount(g, g.vertex_mask(), 0, 0, s);
}

Score CliquesThroughPair(const Graph& g, int u, int v, int s) {
  if (s < 2) return Score();
  return PivotCount(g, g.row(u) & g.row(v) & ~(Bit(u) | Bit(v)), 2, 0, s);
}

Score CountCliquesAtEdge(const Graph& g, Edge e, int s) {
  if (!g.HasEdge(e.u, e.v)) return Score();
  return CliquesThroughPair(g, e.u, e.v, s);
}

std::vector<unsigned> ColorSubsets(int r, int t) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << r); ++m) {
    if (std::popcount(m) == t) masks.push_back(m);
  }
  return masks;
}

Score GrScore(const MultiColoring& mc, int s, int t) {
  Score total;
  for (unsigned mask : ColorSubsets(mc.num_colors(), t)) {
    total += CountCliques(mc.UnionGraph(mask), s);
  }
  return total;
}

ScoreDelta GrDelta(const MultiColoring& mc, Edge e, int new_color, int s,
                   int t) {
  const int old_color = mc.color(e.u, e.v);
  if (old_color == new_color) {
    throw InputError("recoloring to the current color");
  }
  ScoreDelta delta = 0;
  const unsigned old_bit = 1u << (old_color - 1);
  const unsigned new_bit = 1u << (new_color - 1);
  for (unsigned mask : ColorSubsets(mc.num_colors(), t)) {
    const bool has_old = mask & old_bit;
    const bool has_new = mask & new_bit;
    if (has_old == has_new) continue;
    const ScoreDelta through =
        CliquesThroughPair(mc.UnionGraph(mask), e.u, e.v, s).Minus(Score());
    delta += has_new ? through : -through;
  }
  return delta;
}

UnionGraphs::UnionGraphs(const MultiColoring& mc, int t)
    : masks_(ColorSubsets(mc.num_colors(), t)) {
  graphs_.reserve(masks_.size());
  for (unsigned mask : masks_) graphs_.push_back(mc.UnionGraph(mask));
}

Score UnionGraphs::Total(int s) const {
  Score total;
  for (const Graph& g : graphs_) total += CountCliques(g, s);
  return total;
}

ScoreDelta UnionGraphs::RecolorDelta(int u, int v, int old_color,
                                     int new_color, int s) const {
  ScoreDelta delta = 0;
  const unsigned old_bit = 1u << (old_color - 1);
  const unsigned new_bit = 1u << (new_color - 1);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const bool has_old = masks_[i] & old_bit;
    const bool has_new = masks_[i] & new_bit;
    if (has_old == has_new) continue;
    const ScoreDelta through =
        CliquesThroughPair(graphs_[i], u, v, s).Minus(Score());
    delta += has_new ? through : -through;
  }
  return delta;
}

void UnionGraphs::Recolor(int u, int v, int old_color, int new_color) {
  const unsigned old_bit = 1u << (old_color - 1);
  const unsigned new_bit = 1u << (new_color - 1);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const bool has_old = masks_[i] & old_bit;
    const bool has_new = masks_[i] & new_bit;
    if (has_old != has_new) graphs_[i].SetEdge(u, v, has_new);
  }
}

Score CountShape(const Graph& g, const Shape& shape) {
  switch (shape.kind) {
    case Shape::Kind::kBook:
      return CountBooks(g, shape.k);
    case Shape::Kind::kWheel:
      return CountWheels(g, shape.k);
    case Shape::Kind::kClique:
      return CountCliques(g, shape.k);
  }
  return Score();
}

Score ShapeThroughEdge(const Graph& g, const CodegreeCache& cache, int u,
                       int v, const Shape& shape) {
  switch (shape.kind) {
    case Shape::Kind::kBook:
      return BooksThroughEdge(g, cache, u, v, shape.k);
    case Shape::Kind::kWheel:
      return WheelsThroughEdge(g, u, v, shape.k);
    case Shape::Kind::kClique:
      return CliquesThroughPair(g, u, v, shape.k);
  }
  return Score();
}

bool ContainsShape(const Graph& g, const Shape& shape) {
  switch (shape.kind) {
    case Shape::Kind::kBook:
      for (int v = 1; v < g.order(); ++v) {
        Row lower = g.row(v) & LowMask(v);
        while (lower != 0) {
          const int u = std::countr_zero(lower);
          lower &= lower - 1;
          if (std::popcount(g.row(u) & g.row(v)) >= shape.k) return true;
        }
      }
      return false;
    case Shape::Kind::kWheel:
      for (int h = 0; h < g.order(); ++h) {
        if (CyclesIn<true>(g, g.row(h), shape.k - 1) != 0) return true;
      }
      return false;
    case Shape::Kind::kClique:
      return HasCliqueIn(g, g.vertex_mask(), shape.k);
  }
  return false;
}

bool ContainsShapeAtVertex(const Graph& g, int x, const Shape& shape) {
  const Row nx = g.row(x);
  switch (shape.kind) {
    case Shape::Kind::kBook: {
      // x on the spine.
      Row spines = nx;
      while (spines != 0) {
        const int w = std::countr_zero(spines);
        spines &= spines - 1;
        if (std::popcount(nx & g.row(w)) >= shape.k) return true;
      }
      // x is a page of a spine inside N(x).
      Row a_set = nx;
      while (a_set != 0) {
        const int a = std::countr_zero(a_set);
        a_set &= a_set - 1;
        Row b_set = g.row(a) & a_set;
        while (b_set != 0) {
          const int b = std::countr_zero(b_set);
          b_set &= b_set - 1;
          if (std::popcount(g.row(a) & g.row(b)) >= shape.k) return true;
        }
      }
      return false;
    }
    case Shape::Kind::kWheel: {
      const int rim = shape.k - 1;
      if (CyclesIn<true>(g, nx, rim) != 0) return true;
      Row hubs = nx;
      while (hubs != 0) {
        const int h = std::countr_zero(hubs);
        hubs &= hubs - 1;
        if (CyclesThrough<true>(g, x, g.row(h) & ~Bit(x), rim) != 0) {
          return true;
        }
      }
      return false;
    }
    case Shape::Kind::kClique:
      return HasCliqueIn(g, nx, shape.k - 1);
  }
  return false;
}

}  // namespace ramsey
