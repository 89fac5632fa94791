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

#ifndef RAMSEY_HASH_H_
#define RAMSEY_HASH_H_

#include <cstdint>

#include "ramsey/graph.h"

namespace ramsey {

// Fixed 64-bit avalanche permutation (the splitmix64 finalizer).
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Contribution of one (edge, color) pair to the state hash.
constexpr std::uint64_t EdgeColorHash(int edge_index, int color) {
  return Mix64((static_cast<std::uint64_t>(edge_index) << 3) |
               static_cast<std::uint64_t>(color - 1));
}

// XOR of EdgeColorHash over all edges. This hashes the labeled coloring, so
// isomorphic colorings generally hash differently. Recoloring edge e from a
// to b changes the hash by EdgeColorHash(e, a) ^ EdgeColorHash(e, b).
std::uint64_t StateHash(const MultiColoring& mc);

constexpr std::uint64_t RecolorHash(std::uint64_t hash, int edge_index,
                                    int old_color, int new_color) {
  return hash ^ EdgeColorHash(edge_index, old_color) ^
         EdgeColorHash(edge_index, new_color);
}

}  // namespace ramsey

#endif  // RAMSEY_HASH_H_
