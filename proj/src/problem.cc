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

#include "ramsey/problem.h"

#include <cctype>
#include <charconv>
#include <vector>

#include "ramsey/errors.h"
#include "ramsey/graph.h"

namespace ramsey {
namespace {

std::string Quote(std::string_view token) {
  return "'" + std::string(token) + "'";
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCommas(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const size_t comma = s.find(',');
    parts.push_back(Trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

int ParseInt(std::string_view digits, std::string_view token) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      end != digits.data() + digits.size()) {
    throw ParseError("problem: expected an integer in token " + Quote(token));
  }
  return value;
}

Shape ParseShape(std::string_view token) {
  if (token.size() < 2) {
    throw ParseError("problem: malformed shape token " + Quote(token));
  }
  Shape shape;
  switch (token[0]) {
    case 'B':
      shape.kind = Shape::Kind::kBook;
      break;
    case 'W':
      shape.kind = Shape::Kind::kWheel;
      break;
    case 'K':
      shape.kind = Shape::Kind::kClique;
      break;
    default:
      throw ParseError("problem: unknown shape in token " + Quote(token) +
                       " (expected B, W or K)");
  }
  shape.k = ParseInt(token.substr(1), token);
  try {
    Validate(shape);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in token " + Quote(token));
  }
  return shape;
}

}  // namespace

std::string Shape::ToString() const {
  const char letter =
      kind == Kind::kBook ? 'B' : (kind == Kind::kWheel ? 'W' : 'K');
  return letter + std::to_string(k);
}

ProblemSpec::ProblemSpec(TwoColorProblem p) : variant_(p) {}
ProblemSpec::ProblemSpec(GeneralizedProblem p) : variant_(p) {}

int ProblemSpec::num_colors() const {
  return is_two_color() ? 2 : generalized().r;
}

std::string ProblemSpec::ToString() const {
  if (is_two_color()) {
    return two_color().left.ToString() + "," + two_color().right.ToString();
  }
  const auto& g = generalized();
  return "GR:" + std::to_string(g.r) + ",K" + std::to_string(g.s) + "," +
         std::to_string(g.t);
}

void Validate(const Shape& shape) {
  switch (shape.kind) {
    case Shape::Kind::kBook:
      if (shape.k < 1) throw ParseError("book needs at least 1 page");
      break;
    case Shape::Kind::kWheel:
      if (shape.k < 4) throw ParseError("wheel order must be at least 4");
      break;
    case Shape::Kind::kClique:
      if (shape.k < 2) throw ParseError("clique order must be at least 2");
      break;
  }
  if (shape.NumVertices() > kMaxVertices) {
    throw ParseError("shape has more than 64 vertices");
  }
}

void Validate(const GeneralizedProblem& p) {
  if (p.s < 2 || p.s > kMaxVertices) {
    throw ParseError("GR: clique order s=" + std::to_string(p.s) +
                     " outside [2,64]");
  }
  if (p.t < 1 || p.t >= NumPairs(p.s)) {
    throw ParseError("GR: t=" + std::to_string(p.t) + " must satisfy 1 <= t < " +
                     std::to_string(NumPairs(p.s)));
  }
  if (p.r < p.t + 1 || p.r > kMaxColors) {
    throw ParseError("GR: r=" + std::to_string(p.r) + " must satisfy " +
                     std::to_string(p.t + 1) + " <= r <= 8");
  }
}

ProblemSpec ParseProblem(std::string_view text) {
  text = Trim(text);
  constexpr std::string_view kGrPrefix = "GR:";
  if (text.substr(0, kGrPrefix.size()) == kGrPrefix) {
    const auto parts = SplitCommas(text.substr(kGrPrefix.size()));
    if (parts.size() != 3) {
      throw ParseError("problem: expected GR:<r>,K<s>,<t>, got " + Quote(text));
    }
    GeneralizedProblem p;
    p.r = ParseInt(parts[0], parts[0]);
    if (parts[1].empty() || parts[1][0] != 'K') {
      throw ParseError("problem: expected K<s> in token " + Quote(parts[1]));
    }
    p.s = ParseInt(parts[1].substr(1), parts[1]);
    p.t = ParseInt(parts[2], parts[2]);
    try {
      Validate(p);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in " + Quote(text));
    }
    return p;
  }
  const auto parts = SplitCommas(text);
  if (parts.size() != 2) {
    throw ParseError("problem: expected two shapes like W5,W7, got " +
                     Quote(text));
  }
  return TwoColorProblem{ParseShape(parts[0]), ParseShape(parts[1])};
}

}  // namespace ramsey
