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

#include "ramsey/tabu.h"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "ramsey/errors.h"
#include "ramsey/hash.h"
#include "ramsey/verify.h"

namespace ramsey {
namespace {

const Shape& ShapeForColor(const TwoColorProblem& p, int color) {
  return color == 1 ? p.left : p.right;
}

}  // namespace

SearchState::SearchState(const ProblemSpec& spec, int n, std::uint64_t seed)
    : spec_(spec), rng_(seed) {
  if (n < 2) throw InputError("search needs at least 2 vertices");
  const int r = spec.num_colors();
  coloring_ = MultiColoring(n, r);
  std::uniform_int_distribution<int> pick(1, r);
  for (int i = 0; i < NumPairs(n); ++i) coloring_.set_color_at(i, pick(rng_));

  if (spec_.is_two_color()) {
    for (int c = 0; c < 2; ++c) {
      classes_[c] = coloring_.ColorClass(c + 1);
      caches_[c] = CodegreeCache(classes_[c]);
    }
  } else {
    unions_ = UnionGraphs(coloring_, spec_.generalized().t);
  }
  score_ = Recount();
  hash_ = StateHash(coloring_);
  tabu_.insert(hash_);
}

Score SearchState::Recount() const {
  if (spec_.is_two_color()) {
    const auto& p = spec_.two_color();
    return CountShape(coloring_.ColorClass(1), p.left) +
           CountShape(coloring_.ColorClass(2), p.right);
  }
  const auto& p = spec_.generalized();
  return GrScore(coloring_, p.s, p.t);
}

void SearchState::Audit() const {
  if (Recount() != score_) {
    throw InvariantError("tabu: incremental score " + score_.ToString() +
                         " differs from recount " + Recount().ToString());
  }
  if (StateHash(coloring_) != hash_) {
    throw InvariantError("tabu: incremental hash differs from recomputation");
  }
  if (spec_.is_two_color()) {
    for (int c = 0; c < 2; ++c) {
      if (!(classes_[c] == coloring_.ColorClass(c + 1)) ||
          !caches_[c].ConsistentWith(classes_[c])) {
        throw InvariantError("tabu: color class cache out of sync");
      }
    }
  }
}

ScoreDelta SearchState::MoveDelta(int u, int v, int new_color) const {
  const int old_color = coloring_.color(u, v);
  if (spec_.is_two_color()) {
    const auto& p = spec_.two_color();
    const int a = old_color - 1;
    const int b = new_color - 1;
    const Score lost = ShapeThroughEdge(classes_[a], caches_[a], u, v,
                                        ShapeForColor(p, old_color));
    const Score gained = ShapeThroughEdge(classes_[b], caches_[b], u, v,
                                          ShapeForColor(p, new_color));
    return gained.Minus(lost);
  }
  return unions_.RecolorDelta(u, v, old_color, new_color,
                              spec_.generalized().s);
}

void SearchState::ApplyMove(int edge_index, int new_color, ScoreDelta delta) {
  const Edge e = EdgeAt(edge_index);
  const int old_color = coloring_.color_at(edge_index);
  if (spec_.is_two_color()) {
    for (int c : {old_color - 1, new_color - 1}) {
      caches_[c].ApplyToggle(classes_[c], e.u, e.v);
      classes_[c].ToggleEdge(e.u, e.v);
    }
  } else {
    unions_.Recolor(e.u, e.v, old_color, new_color);
  }
  coloring_.set_color_at(edge_index, new_color);
  hash_ = RecolorHash(hash_, edge_index, old_color, new_color);
  score_ = score_.Applied(delta);
  tabu_.insert(hash_);
  ++steps_;
}

StepReport SearchState::Step() {
  struct Candidate {
    int edge_index;
    int color;
    ScoreDelta delta;
  };
  const int r = coloring_.num_colors();
  std::vector<Candidate> best;
  ScoreDelta best_delta = 0;
  int edge_index = 0;
  for (int v = 1; v < coloring_.order(); ++v) {
    for (int u = 0; u < v; ++u, ++edge_index) {
      const int old_color = coloring_.color_at(edge_index);
      for (int c = 1; c <= r; ++c) {
        if (c == old_color) continue;
        if (tabu_.contains(RecolorHash(hash_, edge_index, old_color, c))) {
          continue;
        }
        const ScoreDelta delta = MoveDelta(u, v, c);
        if (best.empty() || delta < best_delta) {
          best.clear();
          best_delta = delta;
        }
        if (delta == best_delta) best.push_back({edge_index, c, delta});
      }
    }
  }
  StepReport report;
  if (best.empty()) {
    report.exhausted = true;
    report.score = score_;
    report.hash = hash_;
    return report;
  }
  std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
  const Candidate chosen = best[pick(rng_)];
  report.moved = true;
  report.edge_index = chosen.edge_index;
  report.old_color = coloring_.color_at(chosen.edge_index);
  report.new_color = chosen.color;
  ApplyMove(chosen.edge_index, chosen.color, chosen.delta);
  report.score = score_;
  report.hash = hash_;
  return report;
}

const char* ToString(StopReason reason) {
  switch (reason) {
    case StopReason::kWitness:
      return "witness";
    case StopReason::kStepLimit:
      return "step-limit";
    case StopReason::kTimeLimit:
      return "time-limit";
    case StopReason::kExhausted:
      return "exhausted";
    case StopReason::kStopped:
      return "stopped";
  }
  return "unknown";
}

SearchOutcome RunSearch(const ProblemSpec& spec, int n, std::uint64_t seed,
                        const SearchLimits& limits,
                        const std::atomic<bool>* stop,
                        const ProgressFn& progress, int worker) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  SearchState state(spec, n, seed);
  SearchOutcome outcome;
  outcome.stats.best_score = state.score();

  while (true) {
    if (state.score().is_zero()) {
      outcome.reason = StopReason::kWitness;
      break;
    }
    if (stop != nullptr && stop->load(std::memory_order_relaxed)) {
      outcome.reason = StopReason::kStopped;
      break;
    }
    if (limits.max_steps && state.steps() >= *limits.max_steps) {
      outcome.reason = StopReason::kStepLimit;
      break;
    }
    // The clock is read every 64 steps to keep it off the hot path.
    if (limits.max_seconds && (state.steps() & 63) == 0 &&
        elapsed() >= *limits.max_seconds) {
      outcome.reason = StopReason::kTimeLimit;
      break;
    }
    const StepReport step = state.Step();
    if (step.exhausted) {
      outcome.reason = StopReason::kExhausted;
      break;
    }
    outcome.stats.best_score = std::min(outcome.stats.best_score, step.score);
    if (state.steps() % kAuditInterval == 0) state.Audit();
    if (progress && state.steps() % kProgressInterval == 0) {
      progress({worker, state.steps(), state.score(),
                outcome.stats.best_score, state.tabu_size()});
    }
  }

  if (outcome.reason == StopReason::kWitness) {
    const Verdict verdict = VerifyColoring(state.coloring(), spec);
    if (!verdict.valid) {
      throw InvariantError("tabu: zero-score coloring fails verification: " +
                           verdict.violation->Describe());
    }
    outcome.witness = state.coloring();
  }
  outcome.stats.steps = state.steps();
  outcome.stats.elapsed_seconds = elapsed();
  outcome.stats.tabu_size = state.tabu_size();
  outcome.stats.final_score = state.score();
  outcome.stats.soft_cap_exceeded =
      limits.tabu_soft_cap && state.tabu_size() > *limits.tabu_soft_cap;
  return outcome;
}

ParallelOutcome RunParallel(const ProblemSpec& spec, int n,
                            const std::vector<std::uint64_t>& seeds,
                            const SearchLimits& limits,
                            const ProgressFn& progress) {
  if (seeds.empty()) throw InputError("parallel search needs at least one seed");
  {
    std::vector<std::uint64_t> sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("parallel search seeds must be distinct");
    }
  }

  ParallelOutcome result;
  result.workers.resize(seeds.size());
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::exception_ptr failure;

  ProgressFn locked_progress;
  if (progress) {
    locked_progress = [&](const Progress& p) {
      std::lock_guard<std::mutex> lock(mu);
      progress(p);
    };
  }

  {
    std::vector<std::jthread> threads;
    threads.reserve(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          SearchOutcome outcome = RunSearch(spec, n, seeds[i], limits, &stop,
                                            locked_progress,
                                            static_cast<int>(i));
          std::lock_guard<std::mutex> lock(mu);
          if (outcome.found() && !result.witness) {
            result.witness = outcome.witness;
            result.winner = static_cast<int>(i);
            stop.store(true);
          }
          result.workers[i] = std::move(outcome);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          stop.store(true);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

}  // namespace ramsey
