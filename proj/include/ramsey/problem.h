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

// What a witness must avoid. Two-color problems forbid one shape in the graph
// (color 1) and another in its complement (color 2). Generalized problems
// GR(r, K_s, t) forbid any K_s whose edges use at most t of the r colors.

#ifndef RAMSEY_PROBLEM_H_
#define RAMSEY_PROBLEM_H_

#include <string>
#include <string_view>
#include <variant>

namespace ramsey {

struct Shape {
  enum class Kind { kBook, kWheel, kClique };

  Kind kind = Kind::kClique;
  // Book: page count. Wheel: total vertex count (hub + rim). Clique: order.
  int k = 3;

  static Shape Book(int pages) { return {Kind::kBook, pages}; }
  static Shape Wheel(int order) { return {Kind::kWheel, order}; }
  static Shape Clique(int order) { return {Kind::kClique, order}; }

  int NumVertices() const { return kind == Kind::kBook ? k + 2 : k; }
  std::string ToString() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

struct TwoColorProblem {
  Shape left;   // forbidden in the graph
  Shape right;  // forbidden in the complement

  friend bool operator==(const TwoColorProblem&,
                         const TwoColorProblem&) = default;
};

struct GeneralizedProblem {
  int r = 3;  // colors
  int s = 4;  // clique order
  int t = 2;  // a K_s with at most t colors is forbidden

  friend bool operator==(const GeneralizedProblem&,
                         const GeneralizedProblem&) = default;
};

class ProblemSpec {
 public:
  ProblemSpec(TwoColorProblem p);      // NOLINT(google-explicit-constructor)
  ProblemSpec(GeneralizedProblem p);   // NOLINT(google-explicit-constructor)

  bool is_two_color() const {
    return std::holds_alternative<TwoColorProblem>(variant_);
  }
  const TwoColorProblem& two_color() const {
    return std::get<TwoColorProblem>(variant_);
  }
  const GeneralizedProblem& generalized() const {
    return std::get<GeneralizedProblem>(variant_);
  }

  // 2 for two-color problems, r otherwise.
  int num_colors() const;

  // Round-trips through ParseProblem.
  std::string ToString() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

 private:
  std::variant<TwoColorProblem, GeneralizedProblem> variant_;
};

// Grammar: "B<i>,B<j>" | "W<i>,W<j>" | "K<i>,K<j>" (shapes may be mixed) or
// "GR:<r>,K<s>,<t>". Throws ParseError naming the offending token.
ProblemSpec ParseProblem(std::string_view text);

// Throws ParseError when parameters are out of range.
void Validate(const Shape& shape);
void Validate(const GeneralizedProblem& p);

}  // namespace ramsey

#endif  // RAMSEY_PROBLEM_H_
