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

// Slow, obviously-correct reference implementations. Nothing here uses the
// library's counters, canonical forms or bit tricks beyond Graph::HasEdge.

#ifndef RAMSEY_TESTS_ORACLES_H_
#define RAMSEY_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ramsey/graph.h"

namespace ramsey::oracle {

// Calls fn(subset) for every `size`-subset of `pool`.
inline void ForEachSubset(const std::vector<int>& pool, int size,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == size) {
      fn(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::vector<int> AllVertices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Spine-labeled books: pairs (edge uv, k-set of common neighbours).
inline std::uint64_t Books(const Graph& g, int k) {
  std::uint64_t total = 0;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.HasEdge(u, v)) continue;
      std::vector<int> others;
      for (int w = 0; w < n; ++w) {
        if (w != u && w != v) others.push_back(w);
      }
      ForEachSubset(others, k, [&](const std::vector<int>& pages) {
        for (int w : pages) {
          if (!g.HasEdge(u, w) || !g.HasEdge(v, w)) return;
        }
        ++total;
      });
    }
  }
  return total;
}

// Hamiltonian cycles (as edge sets) of the subgraph induced on `vs`.
inline std::uint64_t HamiltonianCycles(const Graph& g, std::vector<int> vs) {
  if (vs.size() < 3) return 0;
  std::sort(vs.begin() + 1, vs.end());
  std::uint64_t directed = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i) {
      ok = g.HasEdge(vs[i], vs[(i + 1) % vs.size()]);
    }
    directed += ok;
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return directed / 2;
}

// Hub-labeled wheels: pairs (hub, (k-1)-cycle inside its neighbourhood).
inline std::uint64_t Wheels(const Graph& g, int k) {
  std::uint64_t total = 0;
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> nbrs;
    for (int w = 0; w < g.order(); ++w) {
      if (g.HasEdge(h, w)) nbrs.push_back(w);
    }
    ForEachSubset(nbrs, k - 1, [&](const std::vector<int>& rim) {
      total += HamiltonianCycles(g, rim);
    });
  }
  return total;
}

inline bool IsClique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.HasEdge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

inline std::uint64_t Cliques(const Graph& g, int s) {
  std::uint64_t total = 0;
  ForEachSubset(AllVertices(g.order()), s, [&](const std::vector<int>& vs) {
    total += IsClique(g, vs);
  });
  return total;
}

// For every s-set, the number of t-sets of colors that contain all of its
// edge colors.
inline std::uint64_t GrScore(const MultiColoring& mc, int s, int t) {
  const int r = mc.num_colors();
  std::vector<std::set<int>> color_sets;
  ForEachSubset(AllVertices(r), t, [&](const std::vector<int>& cs) {
    std::set<int> set;
    for (int c : cs) set.insert(c + 1);
    color_sets.push_back(set);
  });
  std::uint64_t total = 0;
  ForEachSubset(AllVertices(mc.order()), s, [&](const std::vector<int>& vs) {
    std::set<int> used;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        used.insert(mc.color(vs[i], vs[j]));
      }
    }
    for (const auto& cs : color_sets) {
      total += std::includes(cs.begin(), cs.end(), used.begin(), used.end());
    }
  });
  return total;
}

// Does `host` contain `pattern` as a (not necessarily induced) subgraph?
// Plain backtracking over injective maps.
inline bool ContainsSubgraph(const Graph& host, const Graph& pattern) {
  const int p = pattern.order();
  const int n = host.order();
  if (p > n) return false;
  std::vector<int> image(p, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == p) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.HasEdge(i, j) && !host.HasEdge(x, image[j])) ok = false;
      }
      if (!ok) continue;
      used[x] = true;
      image[i] = x;
      if (rec(i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return rec(0);
}

// Some K_s whose edges use at most t colors?
inline bool HasBadClique(const MultiColoring& mc, int s, int t) {
  bool found = false;
  ForEachSubset(AllVertices(mc.order()), s, [&](const std::vector<int>& vs) {
    if (found) return;
    std::set<int> used;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        used.insert(mc.color(vs[i], vs[j]));
      }
    }
    found = static_cast<int>(used.size()) <= t;
  });
  return found;
}

// Isomorphism by trying every bijection. Small n only.
inline bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.NumEdges() != b.NumEdges()) return false;
  std::vector<int> perm = AllVertices(a.order());
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u) {
      for (int v = u + 1; v < a.order() && ok; ++v) {
        ok = a.HasEdge(u, v) == b.HasEdge(perm[u], perm[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Colorings equal up to vertex relabeling and color permutation.
inline bool EquivalentColorings(const MultiColoring& a, const MultiColoring& b) {
  if (a.order() != b.order() || a.num_colors() != b.num_colors()) return false;
  const int n = a.order();
  std::vector<int> perm = AllVertices(n);
  std::vector<int> sigma = AllVertices(a.num_colors() + 1);
  do {
    do {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          ok = sigma[a.color(u, v)] == b.color(perm[u], perm[v]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every graph on n labeled vertices.
inline std::vector<Graph> AllGraphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u, ++bit) {
        if ((mask >> bit) & 1) g.AddEdge(u, v);
      }
    }
    out.push_back(g);
  }
  return out;
}

// Isomorphism classes by pairwise comparison against representatives.
inline std::size_t CountClasses(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    if (std::none_of(reps.begin(), reps.end(),
                     [&](const Graph& r) { return Isomorphic(g, r); })) {
      reps.push_back(g);
    }
  }
  return reps.size();
}

inline Graph RandomGraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) g.AddEdge(u, v);
    }
  }
  return g;
}

inline MultiColoring RandomColoring(int n, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, r);
  MultiColoring mc(n, r);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) mc.set_color(u, v, pick(rng));
  }
  return mc;
}

}  // namespace ramsey::oracle

#endif  // RAMSEY_TESTS_ORACLES_H_
