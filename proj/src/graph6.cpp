// Copyright 2026 The distgraph Authors
//
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

#include "distgraph/graph6.hpp"

#include <array>

namespace distgraph {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;

std::size_t group_count(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw std::invalid_argument("graph6 encoding supports at most 62 vertices, got " +
                                std::to_string(n));
  }
  std::string out;
  out.reserve(1 + group_count(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw Graph6Error(Graph6ErrorKind::kEmptyInput, "graph6: empty input");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxPrintable) {
      throw Graph6Error(Graph6ErrorKind::kNonPrintable,
                        "graph6: byte " + std::to_string(c) + " at offset " +
                            std::to_string(i) + " is outside the range 63..126");
    }
  }
  const int header = static_cast<unsigned char>(text[0]);
  if (header == kMaxPrintable) {
    throw Graph6Error(Graph6ErrorKind::kMalformedHeader,
                      "graph6: long-form header (n > 62) is not supported");
  }
  const int n = header - kBias;
  const std::size_t groups = group_count(n);
  const std::size_t body = text.size() - 1;
  if (body < groups) {
    throw Graph6Error(Graph6ErrorKind::kInsufficientBitGroups,
                      "graph6: insufficient bit groups: need " +
                          std::to_string(groups) + " for n = " +
                          std::to_string(n) + ", found " + std::to_string(body));
  }
  if (body > groups) {
    throw Graph6Error(Graph6ErrorKind::kTrailingGarbage,
                      "graph6: trailing garbage: " + std::to_string(body - groups) +
                          " byte(s) after the adjacency data");
  }
  std::array<VertexMask, kMaxVertices> rows{};
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((value >> (5 - bit % 6)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  if (bit % 6 != 0) {
    const int value = static_cast<unsigned char>(text[text.size() - 1]) - kBias;
    if ((value & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw Graph6Error(Graph6ErrorKind::kNonzeroPadding,
                        "graph6: padding bits in the last group are not zero");
    }
  }
  return Graph::from_rows(n, std::span<const VertexMask>(rows.data(),
                                                          static_cast<std::size_t>(n)));
}

}  // namespace distgraph
