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

#include "ramsey/verify.h"

#include <algorithm>
#include <bit>

#include "ramsey/counting.h"
#include "ramsey/errors.h"

namespace ramsey {
namespace {

bool ExtendCycle(const Graph& g, Row allowed, int length,
                 std::vector<int>& path) {
  const int last = path.back();
  if (static_cast<int>(path.size()) == length) {
    return g.HasEdge(last, path.front());
  }
  Row next = g.row(last) & allowed;
  while (next != 0) {
    const int w = std::countr_zero(next);
    next &= next - 1;
    path.push_back(w);
    if (ExtendCycle(g, allowed & ~Bit(w), length, path)) return true;
    path.pop_back();
  }
  return false;
}

std::optional<std::vector<int>> FindCycleIn(const Graph& g, Row vertices,
                                            int length) {
  std::vector<int> path;
  for (Row rest = vertices; rest != 0; rest &= rest - 1) {
    const int start = std::countr_zero(rest);
    path.assign(1, start);
    if (ExtendCycle(g, vertices & ~LowMask(start + 1), length, path)) {
      return path;
    }
  }
  return std::nullopt;
}

bool ExtendClique(const Graph& g, Row candidates, int need,
                  std::vector<int>& members) {
  if (need == 0) return true;
  while (std::popcount(candidates) >= need) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    members.push_back(v);
    if (ExtendClique(g, candidates & g.row(v), need - 1, members)) return true;
    members.pop_back();
  }
  return false;
}

bool AllDistinct(std::vector<int> vs, int n) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  return vs.empty() || (vs.front() >= 0 && vs.back() < n);
}

bool ShapeHolds(const Graph& g, const Shape& shape,
                const std::vector<int>& vs) {
  if (static_cast<int>(vs.size()) != shape.NumVertices()) return false;
  if (!AllDistinct(vs, g.order())) return false;
  switch (shape.kind) {
    case Shape::Kind::kBook:
      if (!g.HasEdge(vs[0], vs[1])) return false;
      for (std::size_t p = 2; p < vs.size(); ++p) {
        if (!g.HasEdge(vs[0], vs[p]) || !g.HasEdge(vs[1], vs[p])) return false;
      }
      return true;
    case Shape::Kind::kWheel: {
      const std::size_t rim = vs.size() - 1;
      for (std::size_t i = 0; i < rim; ++i) {
        const int a = vs[1 + i];
        const int b = vs[1 + (i + 1) % rim];
        if (!g.HasEdge(vs[0], a) || !g.HasEdge(a, b)) return false;
      }
      return true;
    }
    case Shape::Kind::kClique:
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (!g.HasEdge(vs[i], vs[j])) return false;
        }
      }
      return true;
  }
  return false;
}

std::string JoinVertices(const std::vector<int>& vs, std::size_t from,
                         std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string Violation::Describe() const {
  std::string where;
  if (color_set != 0) {
    where = "colors {";
    bool first = true;
    for (int c = 1; c <= kMaxColors; ++c) {
      if (color_set & (1u << (c - 1))) {
        if (!first) where += ',';
        where += std::to_string(c);
        first = false;
      }
    }
    where += "}";
  } else {
    where = color == 1 ? "graph" : "complement";
  }
  const std::string name = shape.ToString();
  switch (shape.kind) {
    case Shape::Kind::kBook:
      return name + " in " + where + ": spine " + JoinVertices(vertices, 0, 2) +
             " pages " + JoinVertices(vertices, 2, vertices.size());
    case Shape::Kind::kWheel:
      return name + " in " + where + ": hub " + JoinVertices(vertices, 0, 1) +
             " rim " + JoinVertices(vertices, 1, vertices.size());
    case Shape::Kind::kClique:
      return name + " in " + where + ": clique " +
             JoinVertices(vertices, 0, vertices.size());
  }
  return name;
}

std::optional<std::vector<int>> FindBook(const Graph& g, int k) {
  for (const Edge& e : g.Edges()) {
    const Row common = g.row(e.u) & g.row(e.v);
    if (std::popcount(common) < k) continue;
    std::vector<int> vs{e.u, e.v};
    for (Row rest = common; static_cast<int>(vs.size()) < k + 2;
         rest &= rest - 1) {
      vs.push_back(std::countr_zero(rest));
    }
    return vs;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> FindWheel(const Graph& g, int k) {
  for (int h = 0; h < g.order(); ++h) {
    if (auto cycle = FindCycleIn(g, g.row(h), k - 1)) {
      cycle->insert(cycle->begin(), h);
      return cycle;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> FindClique(const Graph& g, int s) {
  std::vector<int> members;
  if (ExtendClique(g, g.vertex_mask(), s, members)) return members;
  return std::nullopt;
}

std::optional<std::vector<int>> FindShape(const Graph& g, const Shape& shape) {
  switch (shape.kind) {
    case Shape::Kind::kBook:
      return FindBook(g, shape.k);
    case Shape::Kind::kWheel:
      return FindWheel(g, shape.k);
    case Shape::Kind::kClique:
      return FindClique(g, shape.k);
  }
  return std::nullopt;
}

Verdict Verify(const Graph& g, const TwoColorProblem& p) {
  if (ContainsShape(g, p.left)) {
    return {false, Violation{p.left, 1, 0, *FindShape(g, p.left)}};
  }
  const Graph c = Complement(g);
  if (ContainsShape(c, p.right)) {
    return {false, Violation{p.right, 2, 0, *FindShape(c, p.right)}};
  }
  return {};
}

Verdict VerifyGr(const MultiColoring& mc, const GeneralizedProblem& p) {
  if (mc.num_colors() > p.r) {
    throw InputError("coloring uses " + std::to_string(mc.num_colors()) +
                     " colors but the problem allows " + std::to_string(p.r));
  }
  for (unsigned mask : ColorSubsets(p.r, p.t)) {
    const Graph g = mc.UnionGraph(mask);
    if (auto clique = FindClique(g, p.s)) {
      unsigned used = 0;
      for (std::size_t i = 0; i < clique->size(); ++i) {
        for (std::size_t j = i + 1; j < clique->size(); ++j) {
          used |= 1u << (mc.color((*clique)[i], (*clique)[j]) - 1);
        }
      }
      return {false, Violation{Shape::Clique(p.s), 0, used, *clique}};
    }
  }
  return {};
}

Verdict VerifyColoring(const MultiColoring& mc, const ProblemSpec& spec) {
  if (!spec.is_two_color()) return VerifyGr(mc, spec.generalized());
  if (mc.num_colors() > 2) {
    throw InputError("two-color problem given a " +
                     std::to_string(mc.num_colors()) + "-coloring");
  }
  return Verify(mc.ColorClass(1), spec.two_color());
}

bool ViolationHolds(const Graph& g, const Violation& v) {
  if (v.color == 2) return ShapeHolds(Complement(g), v.shape, v.vertices);
  return v.color == 1 && ShapeHolds(g, v.shape, v.vertices);
}

bool ViolationHolds(const MultiColoring& mc, const GeneralizedProblem& p,
                    const Violation& v) {
  const auto& vs = v.vertices;
  if (v.shape != Shape::Clique(p.s) || static_cast<int>(vs.size()) != p.s ||
      !AllDistinct(vs, mc.order())) {
    return false;
  }
  unsigned used = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      used |= 1u << (mc.color(vs[i], vs[j]) - 1);
    }
  }
  return used == v.color_set && std::popcount(used) <= p.t;
}

}  // namespace ramsey
