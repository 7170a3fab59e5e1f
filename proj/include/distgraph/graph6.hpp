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

// graph6 codec for graphs with at most 62 vertices. The header byte is n+63;
// the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... follows in 6-bit
// groups, most significant bit first, zero-padded, each emitted as value+63.
// The long-header variants and sparse6 are not supported.

#ifndef DISTGRAPH_GRAPH6_HPP_
#define DISTGRAPH_GRAPH6_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "distgraph/graph.hpp"

namespace distgraph {

inline constexpr int kMaxGraph6Order = 62;

enum class Graph6ErrorKind {
  kEmptyInput,
  kMalformedHeader,
  kNonPrintable,
  kInsufficientBitGroups,
  kTrailingGarbage,
  kNonzeroPadding,
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Throws std::invalid_argument when the order exceeds 62.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. A trailing '\n' (and '\r') is tolerated.
/// Throws Graph6Error with a distinct kind per failure.
Graph decode_graph6(std::string_view text);

}  // namespace distgraph

#endif  // DISTGRAPH_GRAPH6_HPP_
