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

#ifndef RAMSEY_VERIFY_H_
#define RAMSEY_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.h"
#include "ramsey/problem.h"

namespace ramsey {

// An explicit forbidden substructure.
//
// Vertex layout by shape:
//   book    spine u, spine v, then the pages
//   wheel   hub, then the rim in cycle order
//   clique  the members
struct Violation {
  Shape shape;
  // Two-color: 1 = found in the graph, 2 = found in the complement.
  // Generalized: unused (0).
  int color = 0;
  // Generalized: bit c-1 set for every color c used by the clique's edges.
  unsigned color_set = 0;
  std::vector<int> vertices;

  std::string Describe() const;
};

struct Verdict {
  bool valid = true;
  std::optional<Violation> violation;
};

std::optional<std::vector<int>> FindBook(const Graph& g, int k);
std::optional<std::vector<int>> FindWheel(const Graph& g, int k);
std::optional<std::vector<int>> FindClique(const Graph& g, int s);
std::optional<std::vector<int>> FindShape(const Graph& g, const Shape& shape);

// g has no copy of p.left and its complement has no copy of p.right.
Verdict Verify(const Graph& g, const TwoColorProblem& p);

// Throws InputError when mc uses more colors than p.r. Colorings that use
// fewer colors than p.r are checked as r-colorings with unused colors.
Verdict VerifyGr(const MultiColoring& mc, const GeneralizedProblem& p);

// Dispatches on the problem. Two-color problems need a coloring with at most
// 2 colors; color 1 is the graph.
Verdict VerifyColoring(const MultiColoring& mc, const ProblemSpec& spec);

// True when the violation's vertices really carry the claimed structure.
bool ViolationHolds(const Graph& g, const Violation& v);
bool ViolationHolds(const MultiColoring& mc, const GeneralizedProblem& p,
                    const Violation& v);

}  // namespace ramsey

#endif  // RAMSEY_VERIFY_H_
