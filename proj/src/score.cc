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

#include "ramsey/score.h"

#include <algorithm>
#include <array>

namespace ramsey {
namespace {

constexpr int kTableSize = 65;

using BinomialTable = std::array<std::array<std::uint64_t, kTableSize>, kTableSize>;

constexpr BinomialTable MakeTable() {
  BinomialTable t{};
  for (int m = 0; m < kTableSize; ++m) {
    t[m][0] = 1;
    for (int k = 1; k <= m; ++k) t[m][k] = t[m - 1][k - 1] + t[m - 1][k];
  }
  return t;
}

constexpr BinomialTable kBinomials = MakeTable();

constexpr u128 kMaxPositive = ~u128{0} >> 1;

}  // namespace

std::string ToString(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string ToString(i128 value) {
  if (value >= 0) return ToString(static_cast<u128>(value));
  return "-" + ToString(static_cast<u128>(-(value + 1)) + 1);
}

Score Score::Applied(ScoreDelta delta) const {
  if (delta >= 0) return *this + Score(static_cast<u128>(delta));
  const u128 magnitude = static_cast<u128>(-(delta + 1)) + 1;
  if (magnitude > value_) {
    throw InvariantError("score delta " + ramsey::ToString(delta) +
                         " exceeds current score " + ToString());
  }
  return Score(value_ - magnitude);
}

ScoreDelta Score::Minus(Score other) const {
  if (value_ > kMaxPositive || other.value_ > kMaxPositive) {
    throw OverflowError("score difference does not fit a signed 128-bit value");
  }
  return static_cast<i128>(value_) - static_cast<i128>(other.value_);
}

std::uint64_t Binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  if (m >= kTableSize) {
    throw CapabilityError("binomial table covers m <= 64 only");
  }
  return kBinomials[m][k];
}

}  // namespace ramsey
