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

#include <random>

#include "gtest/gtest.h"
#include "ramsey/errors.h"
#include "oracles.h"
#include "test_support.h"

namespace ramsey {
namespace {

using oracle::RandomColoring;
using oracle::RandomGraph;

std::uint64_t U64(Score s) { return static_cast<std::uint64_t>(s.value()); }

Edge RandomPair(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, NumPairs(n) - 1);
  return EdgeAt(pick(rng));
}

// ---- books ----

TEST(BooksTest, Examples) {
  EXPECT_EQ(CountBooks(CompleteGraph(4), 2), Score(6));
  EXPECT_EQ(CountBooks(testing::FixtureGraph("RB2B8-20"), 2), Score(0));
  EXPECT_EQ(CountBooks(BookGraph(3), 3), Score(1));
  EXPECT_EQ(CountBooks(Graph(10), 1), Score(0));
}

TEST(BooksTest, DeltaExamples) {
  Graph g = CompleteGraph(4);
  g.RemoveEdge(2, 3);
  EXPECT_EQ(CountBooks(g, 2), Score(1));
  CodegreeCache cache(g);
  EXPECT_EQ(BookDelta(g, cache, {2, 3}, Toggle::kAdd, 2), 5);
  EXPECT_EQ(g, CompleteGraph(4));
  EXPECT_TRUE(cache.ConsistentWith(g));

  Graph single(6);
  single.AddEdge(1, 4);
  CodegreeCache c2(single);
  for (int k = 1; k <= 4; ++k) {
    Graph h = single;
    CodegreeCache hc = c2;
    EXPECT_EQ(BookDelta(h, hc, {1, 4}, Toggle::kRemove, k), 0);
  }
  EXPECT_THROW(BookDelta(single, c2, {0, 2}, Toggle::kRemove, 2), InputError);
}

TEST(BooksTest, ExhaustiveAgainstOracleUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::AllGraphs(n)) {
      for (int k = 1; k <= 3; ++k) {
        ASSERT_EQ(U64(CountBooks(g, k)), oracle::Books(g, k));
      }
    }
  }
}

TEST(BooksTest, RandomAgainstOracleUpToTwelveVertices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = RandomGraph(n, 0.2 + 0.6 * (trial % 7) / 6.0, rng);
    for (int k = 1; k <= 3; ++k) {
      ASSERT_EQ(U64(CountBooks(g, k)), oracle::Books(g, k));
    }
  }
}

TEST(BooksTest, DeltaReplay) {
  std::mt19937_64 rng(22);
  for (int k = 1; k <= 3; ++k) {
    Graph g = RandomGraph(12, 0.5, rng);
    CodegreeCache cache(g);
    Score score = CountBooks(g, k);
    for (int step = 0; step < 10000; ++step) {
      const Edge e = RandomPair(12, rng);
      const Toggle t = g.HasEdge(e.u, e.v) ? Toggle::kRemove : Toggle::kAdd;
      score = score.Applied(BookDelta(g, cache, e, t, k));
      ASSERT_EQ(score, CountBooks(g, k));
    }
    EXPECT_TRUE(cache.ConsistentWith(g));
  }
}

TEST(CodegreeCacheTest, TracksToggles) {
  std::mt19937_64 rng(23);
  Graph g = RandomGraph(20, 0.5, rng);
  CodegreeCache cache(g);
  for (int step = 0; step < 2000; ++step) {
    const Edge e = RandomPair(20, rng);
    cache.ApplyToggle(g, e.u, e.v);
    g.ToggleEdge(e.u, e.v);
  }
  EXPECT_TRUE(cache.ConsistentWith(g));
  for (int u = 0; u < 20; ++u) {
    for (int v = 0; v < 20; ++v) {
      if (u == v) continue;
      ASSERT_EQ(cache.at(u, v), std::popcount(g.row(u) & g.row(v)));
    }
  }
}

// ---- wheels ----

TEST(WheelsTest, Examples) {
  EXPECT_EQ(CountWheels(WheelGraph(5), 5), Score(1));
  EXPECT_EQ(CountWheels(CompleteGraph(5), 5), Score(15));
  const Graph w = DecodeGraph6("Mav?Hwu]`ySZpyyg?");
  EXPECT_EQ(CountWheels(w, 5), Score(0));
  EXPECT_EQ(CountWheels(Complement(w), 7), Score(0));
}

TEST(WheelsTest, DeltaExamples) {
  Graph empty(7);
  for (int k : {4, 5, 6}) {
    Graph g = empty;
    EXPECT_EQ(WheelDelta(g, {2, 5}, Toggle::kAdd, k), 0);
  }
  Graph g = CompleteGraph(5);
  g.RemoveEdge(0, 1);
  const std::uint64_t before = oracle::Wheels(g, 5);
  EXPECT_EQ(WheelDelta(g, {0, 1}, Toggle::kAdd, 5),
            static_cast<ScoreDelta>(15 - before));
}

TEST(WheelsTest, ExhaustiveAgainstOracleUpToSixVertices) {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : oracle::AllGraphs(n)) {
      for (int k = 4; k <= n; ++k) {
        ASSERT_EQ(U64(CountWheels(g, k)), oracle::Wheels(g, k));
      }
    }
  }
}

TEST(WheelsTest, RandomAgainstOracleUpToTwelveVertices) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 5 + trial % 8;
    const Graph g = RandomGraph(n, 0.3 + 0.4 * (trial % 5) / 4.0, rng);
    for (int k = 4; k <= std::min(n, 7); ++k) {
      ASSERT_EQ(U64(CountWheels(g, k)), oracle::Wheels(g, k)) << n << " " << k;
    }
  }
}

TEST(WheelsTest, DeltaReplay) {
  std::mt19937_64 rng(25);
  for (int k : {4, 5, 6, 7}) {
    Graph g = RandomGraph(9, 0.5, rng);
    Score score = CountWheels(g, k);
    for (int step = 0; step < 10000; ++step) {
      const Edge e = RandomPair(9, rng);
      const Toggle t = g.HasEdge(e.u, e.v) ? Toggle::kRemove : Toggle::kAdd;
      score = score.Applied(WheelDelta(g, e, t, k));
      ASSERT_EQ(score, CountWheels(g, k));
    }
  }
}

TEST(WheelsTest, CyclesInSubsets) {
  EXPECT_EQ(CountCyclesIn(CompleteGraph(5), LowMask(5), 4), Score(15));
  EXPECT_EQ(CountCyclesIn(CompleteGraph(5), LowMask(4), 4), Score(3));
  EXPECT_EQ(CountCyclesIn(CycleGraph(7), LowMask(7), 7), Score(1));
}

// ---- cliques ----

TEST(CliquesTest, Examples) {
  EXPECT_EQ(CountCliques(CompleteGraph(5), 3), Score(10));
  EXPECT_EQ(CountCliques(CycleGraph(5), 3), Score(0));
  EXPECT_EQ(CountCliques(CompleteGraph(12), 6), Score(924));
  EXPECT_EQ(CountCliques(CompleteGraph(64), 32), Score(Binomial(64, 32)));
}

TEST(CliquesTest, ExhaustiveAgainstOracleUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::AllGraphs(n)) {
      for (int s = 2; s <= 5; ++s) {
        ASSERT_EQ(U64(CountCliques(g, s)), oracle::Cliques(g, s));
      }
    }
  }
}

TEST(CliquesTest, RandomAgainstOracleAndEdgeRootedSums) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = RandomGraph(n, 0.3 + 0.5 * (trial % 6) / 5.0, rng);
    for (int s = 2; s <= 5; ++s) {
      const Score total = CountCliques(g, s);
      ASSERT_EQ(U64(total), oracle::Cliques(g, s));
      Score rooted;
      for (const Edge& e : g.Edges()) rooted += CountCliquesAtEdge(g, e, s);
      ASSERT_EQ(rooted, total * Score(s * (s - 1) / 2));
    }
  }
}

TEST(CliquesTest, ThroughPairMatchesAddedCount) {
  std::mt19937_64 rng(27);
  for (int step = 0; step < 10000; ++step) {
    const int s = 3 + step % 3;
    Graph g = RandomGraph(10, 0.55, rng);
    const Edge e = RandomPair(10, rng);
    g.RemoveEdge(e.u, e.v);
    const Score before = CountCliques(g, s);
    const Score through = CliquesThroughPair(g, e.u, e.v, s);
    g.AddEdge(e.u, e.v);
    ASSERT_EQ(CountCliques(g, s), before + through);
    ASSERT_EQ(CountCliquesAtEdge(g, e, s), through);
  }
}

// ---- generalized score ----

TEST(GrScoreTest, Examples) {
  EXPECT_EQ(GrScore(testing::FixtureColoring("GR3K42-9"), 4, 2), Score(0));
  MultiColoring mono(4, 3);  // all color 1
  EXPECT_EQ(GrScore(mono, 4, 2), Score(2));
  EXPECT_EQ(GrDelta(mono, {0, 1}, 2, 4, 2), -1);
  mono.set_color(0, 1, 2);
  EXPECT_EQ(GrScore(mono, 4, 2), Score(1));
}

TEST(GrScoreTest, ColorSubsets) {
  EXPECT_EQ(ColorSubsets(3, 2), (std::vector<unsigned>{0b011, 0b101, 0b110}));
  EXPECT_EQ(ColorSubsets(4, 3).size(), 4u);
}

TEST(GrScoreTest, UnaffectedUnionsGiveZeroDelta) {
  // With t = r every union contains both colors, so nothing changes.
  std::mt19937_64 rng(28);
  const MultiColoring mc = RandomColoring(7, 3, rng);
  const Edge e{1, 5};
  const int other = mc.color(1, 5) % 3 + 1;
  EXPECT_EQ(GrDelta(mc, e, other, 3, 3), 0);
}

TEST(GrScoreTest, RandomAgainstOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 7;  // 3..9
    const int r = 2 + trial % 3;  // 2..4
    const MultiColoring mc = RandomColoring(n, r, rng);
    for (int s = 3; s <= std::min(n, 5); ++s) {
      for (int t = 1; t < r && t < s * (s - 1) / 2; ++t) {
        ASSERT_EQ(U64(GrScore(mc, s, t)), oracle::GrScore(mc, s, t));
        ASSERT_EQ(GrScore(mc, s, t).is_zero(), !oracle::HasBadClique(mc, s, t));
      }
    }
  }
}

TEST(GrScoreTest, ColorPermutationInvariance) {
  std::mt19937_64 rng(30);
  const MultiColoring mc = RandomColoring(9, 4, rng);
  std::vector<int> sigma = {1, 2, 3, 4};
  const Score base = GrScore(mc, 4, 2);
  do {
    ASSERT_EQ(GrScore(PermuteColors(mc, sigma), 4, 2), base);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST(GrScoreTest, DeltaReplay) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const int r = 3 + trial % 2;
    const int s = 4;
    const int t = 2 + trial / 2;
    MultiColoring mc = RandomColoring(9, r, rng);
    UnionGraphs unions(mc, t);
    Score score = GrScore(mc, s, t);
    ASSERT_EQ(unions.Total(s), score);
    std::uniform_int_distribution<int> shift(1, r - 1);
    for (int step = 0; step < 10000; ++step) {
      const Edge e = RandomPair(9, rng);
      const int old_color = mc.color(e.u, e.v);
      const int new_color = (old_color - 1 + shift(rng)) % r + 1;
      const ScoreDelta delta = GrDelta(mc, e, new_color, s, t);
      ASSERT_EQ(unions.RecolorDelta(e.u, e.v, old_color, new_color, s), delta);
      mc.set_color(e.u, e.v, new_color);
      unions.Recolor(e.u, e.v, old_color, new_color);
      score = score.Applied(delta);
      ASSERT_EQ(score, GrScore(mc, s, t));
    }
    EXPECT_EQ(unions.Total(s), score);
  }
}

// ---- dispatch and cross-cutting properties ----

TEST(ShapeDispatchTest, ZeroIffPatternAbsent) {
  std::mt19937_64 rng(32);
  const std::vector<std::pair<Shape, Graph>> shapes = {
      {Shape::Book(1), BookGraph(1)},   {Shape::Book(2), BookGraph(2)},
      {Shape::Book(3), BookGraph(3)},   {Shape::Wheel(4), WheelGraph(4)},
      {Shape::Wheel(5), WheelGraph(5)}, {Shape::Wheel(6), WheelGraph(6)},
      {Shape::Clique(3), CompleteGraph(3)}, {Shape::Clique(4), CompleteGraph(4)}};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 4;  // 4..7
    const Graph g = RandomGraph(n, 0.3 + 0.4 * (trial % 3) / 2.0, rng);
    for (const auto& [shape, pattern] : shapes) {
      const bool present = oracle::ContainsSubgraph(g, pattern);
      ASSERT_EQ(!CountShape(g, shape).is_zero(), present) << shape.ToString();
      ASSERT_EQ(ContainsShape(g, shape), present) << shape.ToString();
    }
  }
}

TEST(ShapeDispatchTest, ThroughEdgeAndAtVertex) {
  std::mt19937_64 rng(33);
  const std::vector<Shape> shapes = {Shape::Book(2), Shape::Wheel(5),
                                     Shape::Clique(4)};
  for (int trial = 0; trial < 600; ++trial) {
    const Shape& shape = shapes[trial % shapes.size()];
    Graph g = RandomGraph(9, 0.5, rng);
    const Edge e = RandomPair(9, rng);
    g.RemoveEdge(e.u, e.v);
    const CodegreeCache cache(g);
    const Score before = CountShape(g, shape);
    const Score through = ShapeThroughEdge(g, cache, e.u, e.v, shape);
    g.AddEdge(e.u, e.v);
    ASSERT_EQ(CountShape(g, shape), before + through);

    // A copy through x exists iff deleting x's edges removes some copy.
    const int x = trial % 9;
    Graph without = g;
    for (int w = 0; w < 9; ++w) without.RemoveEdge(x, w);
    ASSERT_EQ(ContainsShapeAtVertex(g, x, shape),
              CountShape(without, shape) < CountShape(g, shape));
  }
}

TEST(CountingPropertiesTest, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = RandomGraph(10, 0.5, rng);
    const Score b = CountBooks(g, 2);
    const Score w = CountWheels(g, 5);
    const Score c = CountCliques(g, 4);
    const Edge e = RandomPair(10, rng);
    g.AddEdge(e.u, e.v);
    ASSERT_GE(CountBooks(g, 2), b);
    ASSERT_GE(CountWheels(g, 5), w);
    ASSERT_GE(CountCliques(g, 4), c);
  }
}

}  // namespace
}  // namespace ramsey
