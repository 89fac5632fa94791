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

#include "ramsey/codec.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>

#include "ramsey/errors.h"

namespace ramsey {
namespace {

constexpr int kBias = 63;
constexpr int kLongHeader = 126;
constexpr long kMaxGraph6Order = 258047;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int SixBits(std::string_view text, size_t pos) {
  const int byte = static_cast<unsigned char>(text[pos]);
  if (byte < kBias || byte > kLongHeader) {
    throw MalformedInputError("graph6: byte " + std::to_string(byte) +
                              " at offset " + std::to_string(pos) +
                              " outside [63,126]");
  }
  return byte - kBias;
}

}  // namespace

Graph DecodeGraph6(std::string_view text) {
  if (text.empty()) throw MalformedInputError("graph6: empty input");
  long n = 0;
  size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) == kLongHeader) {
    if (text.size() < 4) {
      throw MalformedInputError("graph6: truncated order header");
    }
    if (static_cast<unsigned char>(text[1]) == kLongHeader) {
      throw MalformedInputError("graph6: orders above 258047 unsupported");
    }
    n = (SixBits(text, 1) << 12) | (SixBits(text, 2) << 6) | SixBits(text, 3);
    pos = 4;
  } else {
    n = SixBits(text, 0);
    pos = 1;
  }
  if (n > kMaxGraph6Order) {
    throw MalformedInputError("graph6: order out of range");
  }

  const long bits = n * (n - 1) / 2;
  const size_t needed = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos < needed) {
    throw MalformedInputError("graph6: truncated, expected " +
                              std::to_string(pos + needed) + " bytes, got " +
                              std::to_string(text.size()));
  }
  if (text.size() - pos > needed) {
    throw MalformedInputError("graph6: " +
                              std::to_string(text.size() - pos - needed) +
                              " trailing bytes after edge data");
  }
  for (size_t i = pos; i < text.size(); ++i) SixBits(text, i);
  if (n > kMaxVertices) {
    throw CapabilityError("graph6: order " + std::to_string(n) +
                          " exceeds the 64-vertex Graph limit");
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = SixBits(text, pos + static_cast<size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) g.AddEdge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = SixBits(text, text.size() - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw MalformedInputError("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string EncodeGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.HasEdge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  }
  return out;
}

std::vector<Graph> DecodeGraph6Lines(std::string_view text) {
  std::vector<Graph> graphs;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    const std::string_view line = Trim(text.substr(0, eol));
    if (!line.empty()) graphs.push_back(DecodeGraph6(line));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return graphs;
}

namespace {

std::vector<int> ParseIntRow(std::string_view row) {
  std::vector<int> values;
  size_t i = 0;
  while (i < row.size()) {
    const char c = row[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int value = 0;
    const auto [end, ec] =
        std::from_chars(row.data() + i, row.data() + row.size(), value);
    if (ec != std::errc() || end == row.data() + i) {
      throw MalformedInputError("color matrix: unexpected character '" +
                                std::string(1, c) + "'");
    }
    values.push_back(value);
    i = static_cast<size_t>(end - row.data());
  }
  return values;
}

std::vector<std::vector<int>> SplitRows(std::string_view block) {
  std::vector<std::vector<int>> rows;
  if (block.find('[') != std::string_view::npos) {
    int depth = 0;
    size_t open = 0;
    for (size_t i = 0; i < block.size(); ++i) {
      const char c = block[i];
      if (c == '[') {
        ++depth;
        open = i;
      } else if (c == ']') {
        if (depth == 0) throw MalformedInputError("color matrix: stray ']'");
        // An innermost group closes: everything since the last '[' is a row.
        if (open != std::string_view::npos && open < i) {
          const std::string_view inner = block.substr(open + 1, i - open - 1);
          if (inner.find('[') == std::string_view::npos) {
            rows.push_back(ParseIntRow(inner));
          }
          open = std::string_view::npos;
        }
        --depth;
      } else if (depth == 0 && c != ',' &&
                 !std::isspace(static_cast<unsigned char>(c))) {
        throw MalformedInputError("color matrix: text outside brackets");
      }
    }
    if (depth != 0) throw MalformedInputError("color matrix: unbalanced '['");
  } else {
    while (!block.empty()) {
      const size_t eol = block.find('\n');
      const std::string_view line = Trim(block.substr(0, eol));
      if (!line.empty()) rows.push_back(ParseIntRow(line));
      if (eol == std::string_view::npos) break;
      block.remove_prefix(eol + 1);
    }
  }
  return rows;
}

MultiColoring BuildColoring(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw MalformedInputError("color matrix: no rows");
  int r = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw MalformedInputError("color matrix: row " + std::to_string(i) +
                                " has " + std::to_string(rows[i].size()) +
                                " entries, expected " + std::to_string(n));
    }
    if (rows[i][i] != 0) {
      throw MalformedInputError("color matrix: nonzero diagonal at row " +
                                std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows[i][j] != rows[j][i]) {
        throw MalformedInputError("color matrix: asymmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ")");
      }
      if (rows[i][j] < 1) {
        throw MalformedInputError("color matrix: off-diagonal entry (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ") is not a color");
      }
      r = std::max(r, rows[i][j]);
    }
  }
  if (r > kMaxColors) {
    throw MalformedInputError("color matrix: color " + std::to_string(r) +
                              " exceeds the 8-color limit");
  }
  MultiColoring mc(n, r);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) mc.set_color(i, j, rows[i][j]);
  }
  return mc;
}

}  // namespace

MultiColoring ParseColorMatrix(std::string_view text) {
  return BuildColoring(SplitRows(Trim(text)));
}

std::vector<MultiColoring> ParseColorMatrices(std::string_view text) {
  std::vector<MultiColoring> out;
  text = Trim(text);
  if (text.empty()) return out;
  if (text.front() == '[') {
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '[') {
        if (depth == 0) start = i;
        ++depth;
      } else if (text[i] == ']') {
        if (--depth == 0) {
          out.push_back(ParseColorMatrix(text.substr(start, i - start + 1)));
        }
      }
    }
    if (depth != 0) throw MalformedInputError("color matrix: unbalanced '['");
    return out;
  }
  // Bare rows: blank lines separate blocks.
  size_t block_start = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = std::min(text.find('\n', pos), text.size());
    const bool blank = Trim(text.substr(pos, eol - pos)).empty();
    if (blank || eol == text.size()) {
      const size_t block_end = blank ? pos : eol;
      const std::string_view block =
          Trim(text.substr(block_start, block_end - block_start));
      if (!block.empty()) out.push_back(ParseColorMatrix(block));
      block_start = eol + 1;
    }
    pos = eol + 1;
  }
  return out;
}

std::string EmitColorMatrix(const MultiColoring& mc) {
  const int n = mc.order();
  std::string out = "[";
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += ",\n ";
    out += '[';
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(i == j ? 0 : mc.color(i, j));
    }
    out += ']';
  }
  out += "]\n";
  return out;
}

}  // namespace ramsey
