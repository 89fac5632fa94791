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

// Steepest-descent edge recoloring with an unbounded tabu set of visited
// coloring hashes. A run never restarts; diversity comes from running
// independent seeds in parallel.
//
// Two-color problems are searched as 2-colorings: color 1 is the graph and
// must avoid the left shape, color 2 is the complement and must avoid the
// right shape.

#ifndef RAMSEY_TABU_H_
#define RAMSEY_TABU_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "ramsey/counting.h"
#include "ramsey/graph.h"
#include "ramsey/problem.h"
#include "ramsey/score.h"

namespace ramsey {

inline constexpr std::uint64_t kAuditInterval = std::uint64_t{1} << 14;
inline constexpr std::uint64_t kProgressInterval = 10000;

struct StepReport {
  bool moved = false;
  // All candidate moves led to visited colorings.
  bool exhausted = false;
  int edge_index = -1;
  int old_color = 0;
  int new_color = 0;
  Score score;
  std::uint64_t hash = 0;
};

class SearchState {
 public:
  // Uniformly random r-coloring of K_n from the seeded generator. n >= 2.
  SearchState(const ProblemSpec& spec, int n, std::uint64_t seed);

  // One steepest-descent move avoiding visited colorings. Ties are broken
  // uniformly at random.
  StepReport Step();

  const ProblemSpec& spec() const { return spec_; }
  const MultiColoring& coloring() const { return coloring_; }
  Score score() const { return score_; }
  std::uint64_t hash() const { return hash_; }
  std::uint64_t steps() const { return steps_; }
  std::size_t tabu_size() const { return tabu_.size(); }
  bool Visited(std::uint64_t hash) const { return tabu_.contains(hash); }

  // Score from scratch, independent of the incremental caches.
  Score Recount() const;
  // Throws InvariantError if score, hash or caches disagree with a recount.
  void Audit() const;

  // Change in score if edge (u, v) were recolored to new_color.
  ScoreDelta MoveDelta(int u, int v, int new_color) const;

 private:
  void ApplyMove(int edge_index, int new_color, ScoreDelta delta);

  ProblemSpec spec_;
  MultiColoring coloring_;
  Score score_;
  std::uint64_t hash_ = 0;
  std::uint64_t steps_ = 0;
  std::unordered_set<std::uint64_t> tabu_;
  std::mt19937_64 rng_;

  // Two-color problems: color classes and their codegree caches.
  std::array<Graph, 2> classes_;
  std::array<CodegreeCache, 2> caches_;
  // Generalized problems.
  UnionGraphs unions_;
};

struct SearchLimits {
  std::optional<std::uint64_t> max_steps;
  std::optional<double> max_seconds;
  // Reported only; the tabu set is never trimmed.
  std::optional<std::size_t> tabu_soft_cap;
};

enum class StopReason { kWitness, kStepLimit, kTimeLimit, kExhausted, kStopped };

const char* ToString(StopReason reason);

struct SearchStats {
  std::uint64_t steps = 0;
  double elapsed_seconds = 0;
  std::size_t tabu_size = 0;
  Score best_score;
  Score final_score;
  bool soft_cap_exceeded = false;
};

struct SearchOutcome {
  StopReason reason = StopReason::kStopped;
  std::optional<MultiColoring> witness;
  SearchStats stats;

  bool found() const { return witness.has_value(); }
};

struct Progress {
  int worker = 0;
  std::uint64_t steps = 0;
  Score score;
  Score best_score;
  std::size_t tabu_size = 0;
};

using ProgressFn = std::function<void(const Progress&)>;

// Steps until the score reaches zero, a limit is hit, every move is tabu, or
// `stop` is raised. A witness is re-verified from scratch before it is
// returned (InvariantError otherwise).
SearchOutcome RunSearch(const ProblemSpec& spec, int n, std::uint64_t seed,
                        const SearchLimits& limits,
                        const std::atomic<bool>* stop = nullptr,
                        const ProgressFn& progress = {}, int worker = 0);

struct ParallelOutcome {
  std::optional<MultiColoring> witness;
  // Index into seeds of the worker that found the witness, or -1.
  int winner = -1;
  std::vector<SearchOutcome> workers;
};

// One independent search per seed (seeds must be distinct and nonempty).
// The first witness stops the other workers at their next step boundary.
ParallelOutcome RunParallel(const ProblemSpec& spec, int n,
                            const std::vector<std::uint64_t>& seeds,
                            const SearchLimits& limits,
                            const ProgressFn& progress = {});

}  // namespace ramsey

#endif  // RAMSEY_TABU_H_
