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

// Exhaustive bottom-up generation of witnesses: every witness of order n+1
// minus its last vertex is a witness of order n, so extending one
// representative per isomorphism class in every possible way and discarding
// isomorphic duplicates enumerates all classes level by level.
//
// Two-color classes are graphs up to isomorphism. Multicolor classes are
// colorings up to vertex relabeling and color permutation.

#ifndef RAMSEY_GENERATION_H_
#define RAMSEY_GENERATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/canonical.h"
#include "ramsey/graph.h"
#include "ramsey/problem.h"

namespace ramsey {

// All graphs parent + vertex n (every neighbourhood subset) that contain no
// p.left and whose complement contains no p.right. The parent must be a
// witness; only copies through the new vertex are tested.
std::vector<Graph> ExtendOne(const Graph& parent, const TwoColorProblem& p);

// All colorings of parent + vertex n (every assignment of colors to the n new
// edges) with no K_s on at most t colors. Assignments are explored
// depth-first and cut as soon as a prefix closes a bad clique.
std::vector<MultiColoring> ExtendOne(const MultiColoring& parent,
                                     const GeneralizedProblem& p);

struct GenerationOptions {
  int max_n = 10;
  // Wall-clock budget; exceeding it truncates the result.
  std::optional<double> max_seconds;
  // 0 selects std::thread::hardware_concurrency().
  int threads = 0;
  // Retain the canonical keys of every level (otherwise only counts).
  bool keep_levels = false;
};

struct GenerationResult {
  // counts[i] is the number of classes of order i + 1.
  std::vector<std::uint64_t> counts;
  bool truncated = false;
  std::string truncation_reason;
  // levels[i] holds the keys of order i + 1 when keep_levels is set.
  std::vector<std::vector<CanonicalForm>> levels;
};

// Level-by-level generation from the single vertex up to options.max_n.
// Once a level is empty every later level is reported as 0 without work.
// Throws CapabilityError when max_n exceeds the canonical form limit.
GenerationResult GenerateLevels(const ProblemSpec& spec,
                                const GenerationOptions& options);

}  // namespace ramsey

#endif  // RAMSEY_GENERATION_H_
