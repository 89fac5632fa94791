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

#include "ramsey/generation.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "ramsey/counting.h"
#include "ramsey/errors.h"

namespace ramsey {
namespace {

Graph Grow(const Graph& g) {
  Graph out(g.order() + 1);
  for (const Edge& e : g.Edges()) out.AddEdge(e.u, e.v);
  return out;
}

// Depth-first assignment of colors to the edges (x, 0), (x, 1), ... of the
// new vertex x.
class ColoringExtender {
 public:
  ColoringExtender(const MultiColoring& parent, const GeneralizedProblem& p)
      : p_(p), x_(parent.order()), child_(x_ + 1, p.r) {
    for (int v = 1; v < x_; ++v) {
      for (int u = 0; u < v; ++u) child_.set_color(u, v, parent.color(u, v));
    }
  }

  std::vector<MultiColoring> Run() {
    Assign(0);
    return std::move(out_);
  }

 private:
  unsigned ColorBit(int u, int v) const {
    return 1u << (child_.color(u, v) - 1);
  }

  // Is there an (s - 2)-set among vertices < j that, together with x and j,
  // spans a clique on at most t colors? `chosen` holds the set so far and
  // `mask` the colors it already uses.
  bool ClosesBadClique(int j, int from, int need, unsigned mask,
                       std::vector<int>& chosen) const {
    if (need == 0) return true;
    for (int a = from; a <= j - need; ++a) {
      unsigned m = mask | ColorBit(x_, a) | ColorBit(j, a);
      for (int b : chosen) m |= ColorBit(a, b);
      if (std::popcount(m) > p_.t) continue;
      chosen.push_back(a);
      const bool bad = ClosesBadClique(j, a + 1, need - 1, m, chosen);
      chosen.pop_back();
      if (bad) return true;
    }
    return false;
  }

  void Assign(int j) {
    if (j == x_) {
      out_.push_back(child_);
      return;
    }
    for (int c = 1; c <= p_.r; ++c) {
      child_.set_color(x_, j, c);
      std::vector<int> chosen;
      if (ClosesBadClique(j, 0, p_.s - 2, 1u << (c - 1), chosen)) continue;
      Assign(j + 1);
    }
  }

  GeneralizedProblem p_;
  int x_;
  MultiColoring child_;
  std::vector<MultiColoring> out_;
};

}  // namespace

std::vector<Graph> ExtendOne(const Graph& parent, const TwoColorProblem& p) {
  const int n = parent.order();
  if (n + 1 > kMaxVertices) throw CapabilityError("cannot grow past 64 vertices");
  const Graph base = Grow(parent);
  // In the complement the new vertex starts joined to everything.
  const Graph base_complement = Complement(base);
  std::vector<Graph> children;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    Graph g = base;
    Graph c = base_complement;
    ForEachBit(s, [&](int j) {
      g.AddEdge(n, j);
      c.RemoveEdge(n, j);
    });
    if (ContainsShapeAtVertex(g, n, p.left)) continue;
    if (ContainsShapeAtVertex(c, n, p.right)) continue;
    children.push_back(std::move(g));
  }
  return children;
}

std::vector<MultiColoring> ExtendOne(const MultiColoring& parent,
                                     const GeneralizedProblem& p) {
  return ColoringExtender(parent, p).Run();
}

GenerationResult GenerateLevels(const ProblemSpec& spec,
                                const GenerationOptions& options) {
  if (options.max_n < 1) throw InputError("generation needs max_n >= 1");
  if (options.max_n > kMaxCanonicalOrder) {
    throw CapabilityError("generation beyond order " +
                          std::to_string(kMaxCanonicalOrder) +
                          " is not supported");
  }
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto out_of_time = [&] {
    return options.max_seconds &&
           std::chrono::duration<double>(Clock::now() - start).count() >=
               *options.max_seconds;
  };
  const int threads =
      options.threads > 0
          ? options.threads
          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  const bool two_color = spec.is_two_color();
  std::vector<CanonicalForm> frontier;
  frontier.push_back(two_color ? CanonicalKey(Graph(1))
                               : CanonicalKey(MultiColoring(1, spec.num_colors())));

  GenerationResult result;
  result.counts.push_back(1);
  if (options.keep_levels) result.levels.push_back(frontier);

  for (int n = 1; n < options.max_n; ++n) {
    if (frontier.empty()) {
      result.counts.push_back(0);
      if (options.keep_levels) result.levels.emplace_back();
      continue;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> timed_out{false};
    std::vector<std::unordered_set<CanonicalForm>> found(threads);
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < frontier.size(); i = next++) {
              if (timed_out.load(std::memory_order_relaxed)) return;
              if (out_of_time()) {
                timed_out.store(true);
                return;
              }
              if (two_color) {
                for (const Graph& child :
                     ExtendOne(GraphFromKey(frontier[i]), spec.two_color())) {
                  found[w].insert(CanonicalKey(child));
                }
              } else {
                for (const MultiColoring& child :
                     ExtendOne(ColoringFromKey(frontier[i]),
                               spec.generalized())) {
                  found[w].insert(CanonicalKey(child));
                }
              }
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            timed_out.store(true);
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
    if (timed_out) {
      result.truncated = true;
      result.truncation_reason = "time budget exhausted while generating order " +
                                 std::to_string(n + 1);
      return result;
    }
    std::unordered_set<CanonicalForm> merged;
    for (auto& part : found) {
      merged.merge(part);
    }
    frontier.assign(merged.begin(), merged.end());
    std::sort(frontier.begin(), frontier.end());
    result.counts.push_back(frontier.size());
    if (options.keep_levels) result.levels.push_back(frontier);
  }
  return result;
}

}  // namespace ramsey
