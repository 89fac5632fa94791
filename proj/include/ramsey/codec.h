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

// Text codecs: graph6 (nauty-compatible, bit exact) and the bracketed
// color-matrix format used for multicolor witnesses.

#ifndef RAMSEY_CODEC_H_
#define RAMSEY_CODEC_H_

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.h"

namespace ramsey {

// Throws MalformedInputError on bytes outside [63, 126], truncated input,
// surplus bytes or nonzero padding bits. Orders above 64 decode their header
// but raise CapabilityError since Graph rows are single machine words.
Graph DecodeGraph6(std::string_view text);

std::string EncodeGraph6(const Graph& g);

// Reads every non-blank line as one graph6 string (surrounding whitespace
// stripped).
std::vector<Graph> DecodeGraph6Lines(std::string_view text);

// Accepts "[[0,1,2],[1,0,1],[2,1,0]]", the row-per-line layout with or
// without separating commas, and bare CSV rows. The color count is the
// largest entry seen; callers check it against their problem.
MultiColoring ParseColorMatrix(std::string_view text);

// Splits text into matrix blocks. Bracketed blocks end when the bracket
// depth returns to zero; bare CSV blocks are separated by blank lines.
std::vector<MultiColoring> ParseColorMatrices(std::string_view text);

// "[[0,1,2],\n [1,0,1],\n [2,1,0]]" with a trailing newline.
std::string EmitColorMatrix(const MultiColoring& mc);

}  // namespace ramsey

#endif  // RAMSEY_CODEC_H_
