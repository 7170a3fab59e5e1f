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

#ifndef DISTGRAPH_METRICS_HPP_
#define DISTGRAPH_METRICS_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "distgraph/graph.hpp"

namespace distgraph {

struct MetricsReport {
  /// 0 for graphs with at most one vertex; infinite when disconnected.
  ExtendedNat diameter;
  /// Infinite for forests.
  ExtendedNat girth;
  std::uint64_t triangle_count = 0;
  int max_degree = 0;
  /// degree -> number of vertices with that degree.
  std::map<int, int> degree_histogram;
  int component_count = 0;
  bool two_connected = false;
};

MetricsReport metrics(const Graph& g);

/// BFS layers: out[v] is the distance from `source`, or -1 when unreachable.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Vertices at distance exactly `k` from `source`.
VertexMask sphere(const Graph& g, Vertex source, int k);

ExtendedNat diameter(const Graph& g);
ExtendedNat girth(const Graph& g);
std::uint64_t triangle_count(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, at least three vertices, and no cut vertex (lowpoint DFS).
bool is_two_connected(const Graph& g);

}  // namespace distgraph

#endif  // DISTGRAPH_METRICS_HPP_
