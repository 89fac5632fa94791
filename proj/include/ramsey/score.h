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

#ifndef RAMSEY_SCORE_H_
#define RAMSEY_SCORE_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "ramsey/errors.h"

namespace ramsey {

using u128 = unsigned __int128;
using i128 = __int128;

// Signed score change.
using ScoreDelta = i128;

std::string ToString(u128 value);
std::string ToString(i128 value);

// Count of forbidden substructures. 128-bit, checked: leaving the range is an
// OverflowError rather than a wrap.
class Score {
 public:
  constexpr Score() = default;
  constexpr Score(u128 value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  constexpr u128 value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  Score& operator+=(Score other) {
    const u128 sum = value_ + other.value_;
    if (sum < value_) throw OverflowError("score addition overflowed 128 bits");
    value_ = sum;
    return *this;
  }
  friend Score operator+(Score a, Score b) { return a += b; }

  Score& operator*=(Score other) {
    if (other.value_ != 0 && value_ > ~u128{0} / other.value_) {
      throw OverflowError("score multiplication overflowed 128 bits");
    }
    value_ *= other.value_;
    return *this;
  }
  friend Score operator*(Score a, Score b) { return a *= b; }

  // Adds a signed change; a negative result means a delta was wrong.
  Score Applied(ScoreDelta delta) const;

  // Signed difference this - other. Throws if it does not fit.
  ScoreDelta Minus(Score other) const;

  friend constexpr auto operator<=>(Score, Score) = default;

  std::string ToString() const { return ramsey::ToString(value_); }
  friend std::ostream& operator<<(std::ostream& os, Score s) {
    return os << s.ToString();
  }

 private:
  u128 value_ = 0;
};

// C(m, k) for 0 <= m, k <= 64; zero when k > m or k < 0.
std::uint64_t Binomial(int m, int k);

}  // namespace ramsey

#endif  // RAMSEY_SCORE_H_
