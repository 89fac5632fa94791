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

#include "ramsey/hash.h"

namespace ramsey {

std::uint64_t StateHash(const MultiColoring& mc) {
  std::uint64_t h = 0;
  for (int i = 0; i < NumPairs(mc.order()); ++i) {
    h ^= EdgeColorHash(i, mc.color_at(i));
  }
  return h;
}

}  // namespace ramsey
