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

#include "ramsey/problem.h"

#include <string>

#include "gtest/gtest.h"
#include "ramsey/errors.h"
#include "ramsey/score.h"

namespace ramsey {
namespace {

TEST(ParseProblemTest, TwoColorShapes) {
  const ProblemSpec spec = ParseProblem("W5,W7");
  ASSERT_TRUE(spec.is_two_color());
  EXPECT_EQ(spec.two_color().left, Shape::Wheel(5));
  EXPECT_EQ(spec.two_color().right, Shape::Wheel(7));
  EXPECT_EQ(spec.num_colors(), 2);

  const ProblemSpec mixed = ParseProblem(" B3 , W5 ");
  EXPECT_EQ(mixed.two_color().left, Shape::Book(3));
  EXPECT_EQ(mixed.two_color().right, Shape::Wheel(5));
  EXPECT_EQ(ParseProblem("K3,K3").two_color().left, Shape::Clique(3));
}

TEST(ParseProblemTest, Generalized) {
  const ProblemSpec spec = ParseProblem("GR:3,K4,2");
  ASSERT_FALSE(spec.is_two_color());
  EXPECT_EQ(spec.generalized(), (GeneralizedProblem{3, 4, 2}));
  EXPECT_EQ(spec.num_colors(), 3);
}

TEST(ParseProblemTest, RoundTripsThroughToString) {
  for (const char* text : {"W5,W9", "B2,B10", "K3,W4", "GR:4,K4,3", "GR:3,K6,2"}) {
    const ProblemSpec spec = ParseProblem(text);
    EXPECT_EQ(ParseProblem(spec.ToString()), spec) << text;
  }
  EXPECT_EQ(ParseProblem("B2,B8").ToString(), "B2,B8");
}

void ExpectParseErrorNaming(const std::string& text, const std::string& token) {
  try {
    ParseProblem(text);
    FAIL() << "accepted " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(token), std::string::npos)
        << e.what() << " should name " << token;
  }
}

TEST(ParseProblemTest, RangeErrorsNameTheToken) {
  ExpectParseErrorNaming("B0,B1", "B0");
  ExpectParseErrorNaming("W3,W5", "W3");
  ExpectParseErrorNaming("K1,K3", "K1");
  ExpectParseErrorNaming("X3,K3", "X3");
  ExpectParseErrorNaming("B2,Bx", "Bx");
}

TEST(ParseProblemTest, GrammarErrors) {
  EXPECT_THROW(ParseProblem(""), ParseError);
  EXPECT_THROW(ParseProblem("B2"), ParseError);
  EXPECT_THROW(ParseProblem("B2,B3,B4"), ParseError);
  EXPECT_THROW(ParseProblem("GR:3,K4"), ParseError);
  EXPECT_THROW(ParseProblem("GR:3,W4,2"), ParseError);
  // t must be below C(s,2) and r at least t + 1.
  EXPECT_THROW(ParseProblem("GR:3,K3,3"), ParseError);
  EXPECT_THROW(ParseProblem("GR:2,K4,2"), ParseError);
  EXPECT_THROW(ParseProblem("GR:3,K4,0"), ParseError);
  EXPECT_NO_THROW(ParseProblem("GR:2,K3,1"));
}

TEST(ShapeTest, VertexCounts) {
  EXPECT_EQ(Shape::Book(3).NumVertices(), 5);
  EXPECT_EQ(Shape::Wheel(5).NumVertices(), 5);
  EXPECT_EQ(Shape::Clique(4).NumVertices(), 4);
}

TEST(BinomialTest, TableProperties) {
  for (int m = 0; m <= 64; ++m) {
    EXPECT_EQ(Binomial(m, 0), 1u);
    EXPECT_EQ(Binomial(m, m), 1u);
    EXPECT_EQ(Binomial(m, m + 1), 0u);
    for (int k = 1; k < m; ++k) {
      ASSERT_EQ(Binomial(m, k), Binomial(m - 1, k - 1) + Binomial(m - 1, k));
    }
  }
  EXPECT_EQ(Binomial(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(Binomial(5, -1), 0u);
}

TEST(ScoreTest, CheckedArithmetic) {
  const Score max(~u128{0});
  EXPECT_THROW(max + Score(1), OverflowError);
  EXPECT_THROW(max * Score(2), OverflowError);
  EXPECT_EQ((Score(6) * Score(7)).value(), 42u);
  EXPECT_EQ(Score(10).Applied(-4), Score(6));
  EXPECT_THROW(Score(3).Applied(-4), std::exception);
  EXPECT_EQ(Score(3).Minus(Score(10)), -7);
  EXPECT_EQ(Score(0).ToString(), "0");
  EXPECT_EQ(max.ToString(), "340282366920938463463374607431768211455");
  EXPECT_EQ(ToString(static_cast<i128>(-12)), "-12");
}

}  // namespace
}  // namespace ramsey
