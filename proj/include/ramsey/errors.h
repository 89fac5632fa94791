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

#ifndef RAMSEY_ERRORS_H_
#define RAMSEY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ramsey {

// Input text (graph6, color matrix, problem string) does not follow its
// format.
class MalformedInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem grammar violation; the message names the offending token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a supported size or a configured budget.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked score arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Arguments are individually well formed but inconsistent with each other
// (e.g. a coloring with the wrong number of colors for a problem).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ramsey

#endif  // RAMSEY_ERRORS_H_
