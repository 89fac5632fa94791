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

#include <set>

#include "gtest/gtest.h"
#include "ramsey/errors.h"
#include "ramsey/hash.h"
#include "ramsey/verify.h"

namespace ramsey {
namespace {

SearchLimits Steps(std::uint64_t n) {
  SearchLimits limits;
  limits.max_steps = n;
  return limits;
}

TEST(TabuTest, FiveVertexTriangleFreeColoringsAreFoundQuickly) {
  const ProblemSpec spec = ParseProblem("K3,K3");
  int found = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SearchOutcome out = RunSearch(spec, 5, seed, Steps(1000));
    if (out.found()) {
      ++found;
      EXPECT_TRUE(VerifyColoring(*out.witness, spec).valid);
      EXPECT_EQ(out.reason, StopReason::kWitness);
      EXPECT_TRUE(out.stats.final_score.is_zero());
    }
  }
  EXPECT_GE(found, 95);
}

TEST(TabuTest, SameSeedSameTrajectory) {
  const ProblemSpec spec = ParseProblem("B2,B3");
  SearchState a(spec, 9, 77);
  SearchState b(spec, 9, 77);
  EXPECT_EQ(a.coloring(), b.coloring());
  for (int i = 0; i < 300; ++i) {
    const StepReport ra = a.Step();
    const StepReport rb = b.Step();
    ASSERT_EQ(ra.edge_index, rb.edge_index);
    ASSERT_EQ(ra.new_color, rb.new_color);
    ASSERT_EQ(ra.hash, rb.hash);
  }
  EXPECT_EQ(a.coloring(), b.coloring());
}

TEST(TabuTest, DifferentSeedsDiffer) {
  const ProblemSpec spec = ParseProblem("K4,K4");
  std::set<std::uint64_t> hashes;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    hashes.insert(SearchState(spec, 12, seed).hash());
  }
  EXPECT_EQ(hashes.size(), 10u);
}

TEST(TabuTest, NeverRevisitsAColoring) {
  for (const char* text : {"K3,K4", "W5,B2", "GR:3,K4,2"}) {
    const ProblemSpec spec = ParseProblem(text);
    SearchState state(spec, 9, 5);
    std::set<std::uint64_t> seen = {state.hash()};
    EXPECT_EQ(state.tabu_size(), 1u);
    for (int i = 0; i < 2000 && !state.score().is_zero(); ++i) {
      const StepReport r = state.Step();
      if (r.exhausted) break;
      ASSERT_TRUE(r.moved);
      ASSERT_TRUE(seen.insert(r.hash).second) << text << " step " << i;
      ASSERT_EQ(state.tabu_size(), seen.size());
      ASSERT_TRUE(state.Visited(r.hash));
    }
  }
}

TEST(TabuTest, StepsAreSteepestAndIncrementalStateIsExact) {
  for (const char* text : {"B2,B4", "W5,K3", "K4,K4", "GR:3,K4,2", "GR:4,K4,3"}) {
    const ProblemSpec spec = ParseProblem(text);
    SearchState state(spec, 10, 11);
    for (int i = 0; i < 400 && !state.score().is_zero(); ++i) {
      // Best admissible delta, from the public move evaluator.
      const int r = spec.num_colors();
      std::optional<ScoreDelta> best;
      for (int e = 0; e < NumPairs(10); ++e) {
        const Edge edge = EdgeAt(e);
        const int old_color = state.coloring().color_at(e);
        for (int c = 1; c <= r; ++c) {
          if (c == old_color ||
              state.Visited(RecolorHash(state.hash(), e, old_color, c))) {
            continue;
          }
          const ScoreDelta d = state.MoveDelta(edge.u, edge.v, c);
          if (!best || d < *best) best = d;
        }
      }
      const Score before = state.score();
      const StepReport step = state.Step();
      if (step.exhausted) {
        ASSERT_FALSE(best.has_value());
        break;
      }
      ASSERT_EQ(step.score, before.Applied(*best)) << text;
      ASSERT_EQ(state.score(), state.Recount()) << text;
      ASSERT_EQ(state.hash(), StateHash(state.coloring())) << text;
    }
    EXPECT_NO_THROW(state.Audit());
  }
}

TEST(TabuTest, SixVerticesNeverAvoidTriangles) {
  const ProblemSpec spec = ParseProblem("K3,K3");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SearchOutcome out = RunSearch(spec, 6, seed, Steps(3000));
    EXPECT_FALSE(out.found());
    EXPECT_TRUE(out.reason == StopReason::kStepLimit ||
                out.reason == StopReason::kExhausted);
    EXPECT_FALSE(out.stats.best_score.is_zero());
  }
}

TEST(TabuTest, TimeLimitAndStopFlag) {
  const ProblemSpec spec = ParseProblem("K4,K4");
  SearchLimits limits;
  limits.max_seconds = 0.0;
  EXPECT_EQ(RunSearch(spec, 20, 1, limits).reason, StopReason::kTimeLimit);
  const std::atomic<bool> stop{true};
  EXPECT_EQ(RunSearch(spec, 20, 1, {}, &stop).reason, StopReason::kStopped);
}

TEST(TabuTest, ProgressIsReported) {
  // No witness exists, so the run lasts the full step budget.
  const ProblemSpec spec = ParseProblem("K3,K3");
  int calls = 0;
  RunSearch(spec, 10, 3, Steps(2 * kProgressInterval), nullptr,
            [&](const Progress& p) {
              ++calls;
              EXPECT_EQ(p.steps % kProgressInterval, 0u);
            });
  EXPECT_EQ(calls, 2);
}

TEST(TabuTest, GeneralizedSearchFindsSmallWitness) {
  const ProblemSpec spec = ParseProblem("GR:3,K4,2");
  bool found = false;
  for (std::uint64_t seed = 0; seed < 20 && !found; ++seed) {
    const SearchOutcome out = RunSearch(spec, 8, seed, Steps(20000));
    if (out.found()) {
      found = true;
      EXPECT_TRUE(VerifyColoring(*out.witness, spec).valid);
    }
  }
  EXPECT_TRUE(found);
}

TEST(TabuParallelTest, WinnerWitnessVerifies) {
  const ProblemSpec spec = ParseProblem("K3,K4");
  const ParallelOutcome out = RunParallel(spec, 8, {1, 2, 3, 4}, Steps(50000));
  ASSERT_TRUE(out.witness.has_value());
  ASSERT_GE(out.winner, 0);
  ASSERT_LT(out.winner, 4);
  EXPECT_TRUE(VerifyColoring(*out.witness, spec).valid);
  EXPECT_EQ(out.workers.size(), 4u);
  EXPECT_TRUE(out.workers[out.winner].found());
}

TEST(TabuParallelTest, SeedsMustBeDistinct) {
  const ProblemSpec spec = ParseProblem("K3,K3");
  EXPECT_THROW(RunParallel(spec, 5, {3, 3}, Steps(10)), InputError);
  EXPECT_THROW(RunParallel(spec, 5, {}, Steps(10)), InputError);
}

TEST(TabuTest, RejectsTinyOrders) {
  EXPECT_THROW(SearchState(ParseProblem("K3,K3"), 1, 0), InputError);
}

}  // namespace
}  // namespace ramsey
