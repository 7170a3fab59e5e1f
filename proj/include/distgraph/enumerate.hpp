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

// Isomorph-free generation of small graphs by canonical augmentation, and the
// sharded search for self 2-distance graphs built on top of it.
//
// A graph on n vertices is produced from its parent on n-1 vertices by adding
// one vertex. A child is kept when (a) its neighbor set is the first of its
// orbit under the parent's automorphism group and (b) the new vertex lies in
// the automorphism orbit of the child's canonical deletion vertex: the vertex
// maximizing (degree, sum of neighbor degrees), ties broken by the largest
// canonical label. Every isomorphism class is reached exactly once.

#ifndef DISTGRAPH_ENUMERATE_HPP_
#define DISTGRAPH_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distgraph/graph.hpp"

namespace distgraph {

struct SearchFilter {
  bool connected_only = false;
  int min_n = 0;
  std::optional<int> regular_degree;
  bool require_c4_free = false;
  bool require_diamond_free = false;
  bool require_disjoint_triangles = false;

  friend bool operator==(const SearchFilter&, const SearchFilter&) = default;
};

/// True when `g` passes every predicate of `filter`.
bool passes_filter(const Graph& g, const SearchFilter& filter);

struct EnumerationOptions {
  /// Worker threads. Values below 1 mean 1.
  int jobs = 1;
  /// Largest n accepted without a degree bound.
  int ceiling = 10;
  /// Largest n accepted when filter.regular_degree is set.
  int bounded_degree_ceiling = 16;
};

class CeilingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Called once per isomorphism class; `shard` is the worker index in
/// [0, jobs). Calls from different shards may run concurrently.
using ShardVisitor = std::function<void(const Graph& g, int shard)>;

/// Visits one representative of every isomorphism class on exactly `n`
/// vertices that passes `filter`. Returns the number of classes visited.
/// Throws CeilingError when n exceeds the applicable ceiling.
std::uint64_t enumerate_graphs(int n, const SearchFilter& filter,
                               const ShardVisitor& visitor,
                               const EnumerationOptions& options = {});

/// Single-visitor convenience overload; the visitor is serialized.
std::uint64_t enumerate_graphs(int n, const SearchFilter& filter,
                               const std::function<void(const Graph&)>& visitor,
                               const EnumerationOptions& options = {});

struct SearchCertificate {
  int n = 0;
  SearchFilter filter;
  std::uint64_t classes_scanned = 0;
  /// graph6 of the canonically labeled hits, sorted by canonical form.
  std::vector<std::string> hits;
  /// Edgeless fixed points, kept apart from `hits`.
  std::vector<std::string> degenerate_hits;
  /// Seconds.
  double wall_time = 0.0;
  int shard_count = 1;
  std::string tool_version;
};

/// Every class on exactly `n` vertices passing `filter` whose 2-distance
/// graph is isomorphic to it. The result is independent of options.jobs
/// apart from wall_time and shard_count. A non-null `observer` additionally
/// sees every scanned class, under the ShardVisitor concurrency rules.
SearchCertificate search_self_two_distance(int n, const SearchFilter& filter,
                                           const EnumerationOptions& options = {},
                                           const ShardVisitor* observer = nullptr);

/// Library version string recorded in certificates.
const char* tool_version();

}  // namespace distgraph

#endif  // DISTGRAPH_ENUMERATE_HPP_
