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

#include "ramsey/canonical.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ramsey/errors.h"

namespace ramsey {
namespace {

constexpr char kGraphTag = 'G';
constexpr char kColoringTag = 'C';
constexpr std::size_t kMaxStoredAutomorphisms = 1024;

using Cells = std::vector<std::vector<int>>;

// Complete graph on n vertices whose pairs carry a value in [0, num_values).
// Graphs use values {0, 1}; colorings use the color itself (diagonal 0).
struct PairMatrix {
  int n = 0;
  int num_values = 0;
  std::vector<std::uint8_t> value;

  std::uint8_t at(int u, int v) const { return value[u * n + v]; }
};

PairMatrix MatrixOf(const Graph& g) {
  PairMatrix m{g.order(), 2, std::vector<std::uint8_t>(g.order() * g.order())};
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) m.value[u * m.n + v] = g.HasEdge(u, v);
  }
  return m;
}

PairMatrix MatrixOf(const MultiColoring& mc) {
  const int n = mc.order();
  PairMatrix m{n, mc.num_colors() + 1, std::vector<std::uint8_t>(n * n)};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      m.value[u * n + v] = u == v ? 0 : static_cast<std::uint8_t>(mc.color(u, v));
    }
  }
  return m;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

class LabelingSearch {
 public:
  explicit LabelingSearch(const PairMatrix& m) : m_(m) {}

  // Returns position -> vertex for the best leaf.
  std::vector<int> Run() {
    Cells root(1);
    root[0].resize(m_.n);
    std::iota(root[0].begin(), root[0].end(), 0);
    std::vector<int> prefix;
    Visit(std::move(root), prefix);
    return best_order_;
  }

  const std::string& best_certificate() const { return best_cert_; }

 private:
  // Splits every cell by the per-cell value histogram of its members until
  // nothing changes. Cells keep their relative order; pieces of a split cell
  // are ordered by histogram, so the result depends only on cell contents.
  void Refine(Cells& cells) const {
    const int n = m_.n;
    const int values = m_.num_values;
    std::vector<int> cell_of(n);
    std::vector<std::string> sig(n);
    while (true) {
      const int k = static_cast<int>(cells.size());
      if (k == n) return;
      for (int c = 0; c < k; ++c) {
        for (int v : cells[c]) cell_of[v] = c;
      }
      for (int v = 0; v < n; ++v) {
        sig[v].assign(static_cast<std::size_t>(k) * values, '\0');
        for (int x = 0; x < n; ++x) {
          if (x != v) ++sig[v][cell_of[x] * values + m_.at(v, x)];
        }
      }
      Cells next;
      next.reserve(n);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::sort(cell.begin(), cell.end(), [&](int a, int b) {
          return sig[a] != sig[b] ? sig[a] < sig[b] : a < b;
        });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            start = i;
          }
        }
      }
      const bool stable = static_cast<int>(next.size()) == k;
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::string Certificate(const std::vector<int>& order) const {
    std::string cert;
    cert.reserve(NumPairs(m_.n));
    for (int j = 1; j < m_.n; ++j) {
      for (int i = 0; i < j; ++i) {
        cert.push_back(static_cast<char>(m_.at(order[i], order[j])));
      }
    }
    return cert;
  }

  // gamma maps each vertex to the vertex at the same position of `other`.
  void RecordAutomorphism(const std::vector<int>& order,
                          const std::vector<int>& other) {
    if (autos_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> gamma(m_.n);
    for (int p = 0; p < m_.n; ++p) gamma[order[p]] = other[p];
    if (std::find(autos_.begin(), autos_.end(), gamma) == autos_.end()) {
      autos_.push_back(std::move(gamma));
    }
  }

  static int CommonPrefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // An automorphism onto an earlier leaf maps the whole subtree below the
  // point of divergence onto one already explored, so the search backs up
  // to that point.
  void Leaf(const Cells& cells, const std::vector<int>& prefix) {
    std::vector<int> order(m_.n);
    for (int p = 0; p < m_.n; ++p) order[p] = cells[p][0];
    std::string cert = Certificate(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_cert_ = cert;
      first_prefix_ = prefix;
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      best_prefix_ = prefix;
      return;
    }
    if (cert == first_cert_) {
      RecordAutomorphism(order, first_order_);
      backtrack_to_ = CommonPrefix(prefix, first_prefix_);
    } else if (cert == best_cert_) {
      RecordAutomorphism(order, best_order_);
      backtrack_to_ = CommonPrefix(prefix, best_prefix_);
    } else if (cert < best_cert_) {
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      best_prefix_ = prefix;
    }
  }

  // True if some known automorphism fixing `prefix` pointwise maps an
  // already explored sibling onto w.
  bool Pruned(int w, const std::vector<int>& explored,
              const std::vector<int>& prefix) const {
    if (explored.empty() || autos_.empty()) return false;
    UnionFind orbits(m_.n);
    bool any = false;
    for (const auto& gamma : autos_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < m_.n; ++v) orbits.Union(v, gamma[v]);
    }
    if (!any) return false;
    const int root = orbits.Find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int e) { return orbits.Find(e) == root; });
  }

  void Visit(Cells cells, std::vector<int>& prefix) {
    Refine(cells);
    if (static_cast<int>(cells.size()) == m_.n) {
      Leaf(cells, prefix);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    std::vector<int> members = cells[target];
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int w : members) {
      if (Pruned(w, explored, prefix)) continue;
      explored.push_back(w);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<int> rest;
        for (int v : cells[c]) {
          if (v != w) rest.push_back(v);
        }
        child.push_back(std::move(rest));
      }
      const int depth = static_cast<int>(prefix.size());
      prefix.push_back(w);
      Visit(std::move(child), prefix);
      prefix.pop_back();
      if (backtrack_to_ >= 0) {
        if (depth > backtrack_to_) return;
        backtrack_to_ = -1;
      }
    }
  }

  const PairMatrix& m_;
  std::vector<int> first_order_;
  std::string first_cert_;
  std::vector<int> best_order_;
  std::string best_cert_;
  std::vector<int> first_prefix_;
  std::vector<int> best_prefix_;
  std::vector<std::vector<int>> autos_;
  // Depth to resume at after an automorphism was found, or -1.
  int backtrack_to_ = -1;
};

void CheckOrder(int n) {
  if (n > kMaxCanonicalOrder) {
    throw CapabilityError("canonical form: order " + std::to_string(n) +
                          " exceeds supported maximum " +
                          std::to_string(kMaxCanonicalOrder));
  }
}

std::string Header(char tag, int n, int r) {
  std::string h;
  h.push_back(tag);
  h.push_back(static_cast<char>(n));
  h.push_back(static_cast<char>(r));
  return h;
}

}  // namespace

std::vector<int> CanonicalOrder(const Graph& g) {
  CheckOrder(g.order());
  if (g.order() == 0) return {};
  const PairMatrix m = MatrixOf(g);
  return LabelingSearch(m).Run();
}

CanonicalForm CanonicalKey(const Graph& g) {
  CheckOrder(g.order());
  std::string key = Header(kGraphTag, g.order(), 2);
  if (g.order() > 1) {
    const PairMatrix m = MatrixOf(g);
    LabelingSearch search(m);
    search.Run();
    key += search.best_certificate();
  }
  return CanonicalForm(std::move(key));
}

CanonicalForm CanonicalKey(const MultiColoring& mc) {
  CheckOrder(mc.order());
  const int r = mc.num_colors();
  std::string best;
  if (mc.order() > 1) {
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      const PairMatrix m = MatrixOf(PermuteColors(mc, sigma));
      LabelingSearch search(m);
      search.Run();
      if (best.empty() || search.best_certificate() < best) {
        best = search.best_certificate();
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return CanonicalForm(Header(kColoringTag, mc.order(), r) + best);
}

Graph GraphFromKey(const CanonicalForm& key) {
  const std::string& b = key.bytes();
  if (b.size() < 3 || b[0] != kGraphTag) {
    throw InputError("canonical key does not describe a graph");
  }
  const int n = static_cast<unsigned char>(b[1]);
  Graph g(n);
  for (int i = 0; i < NumPairs(n); ++i) {
    if (b[3 + i] != 0) {
      const Edge e = EdgeAt(i);
      g.AddEdge(e.u, e.v);
    }
  }
  return g;
}

MultiColoring ColoringFromKey(const CanonicalForm& key) {
  const std::string& b = key.bytes();
  if (b.size() < 3 || b[0] != kColoringTag) {
    throw InputError("canonical key does not describe a coloring");
  }
  const int n = static_cast<unsigned char>(b[1]);
  const int r = static_cast<unsigned char>(b[2]);
  MultiColoring mc(n, r);
  for (int i = 0; i < NumPairs(n); ++i) mc.set_color_at(i, b[3 + i]);
  return mc;
}

}  // namespace ramsey
