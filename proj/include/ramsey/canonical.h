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

// Canonical forms for graphs and edge colorings.
//
// The labeling search refines an ordered vertex partition to an equitable
// one (1-dimensional Weisfeiler-Leman on the pair values), individualizes a
// vertex of the first smallest non-singleton cell, and recurses. Among all
// discrete leaves it keeps the lexicographically smallest relabeled
// upper-triangle string. Automorphisms discovered from equal leaves prune
// sibling branches that lie in one orbit of the prefix stabilizer.
//
// For colorings the key is additionally minimized over all permutations of
// the color names, so it identifies colorings up to vertex relabeling and
// color swapping.

#ifndef RAMSEY_CANONICAL_H_
#define RAMSEY_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.h"

namespace ramsey {

inline constexpr int kMaxCanonicalOrder = 32;

class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  friend auto operator<=>(const CanonicalForm&,
                          const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

// Throws CapabilityError when g.order() > kMaxCanonicalOrder.
CanonicalForm CanonicalKey(const Graph& g);
// Invariant under vertex relabeling and color permutation.
CanonicalForm CanonicalKey(const MultiColoring& mc);

// Position -> original vertex of a canonical labeling of g; relabeling g by
// the inverse of this order yields the canonical representative.
std::vector<int> CanonicalOrder(const Graph& g);

// The representative a key was built from.
Graph GraphFromKey(const CanonicalForm& key);
MultiColoring ColoringFromKey(const CanonicalForm& key);

}  // namespace ramsey

template <>
struct std::hash<ramsey::CanonicalForm> {
  std::size_t operator()(const ramsey::CanonicalForm& key) const noexcept {
    return std::hash<std::string>{}(key.bytes());
  }
};

#endif  // RAMSEY_CANONICAL_H_
