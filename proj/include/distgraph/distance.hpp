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

#ifndef DISTGRAPH_DISTANCE_HPP_
#define DISTGRAPH_DISTANCE_HPP_

#include <cstdint>
#include <optional>

#include "distgraph/graph.hpp"

namespace distgraph {

/// Graph on the same vertices joining pairs at distance exactly `k`.
/// Throws std::invalid_argument for k < 1.
Graph distance_graph(const Graph& g, int k);

struct SelfDistanceResult {
  bool holds = false;
  /// witness[v] is the image of v in distance_graph(g, 2).
  std::optional<Permutation> witness;
};

/// Whether `g` is isomorphic to its own 2-distance graph. This is the
/// literal predicate: edgeless graphs are (degenerate) fixed points.
SelfDistanceResult is_self_two_distance(const Graph& g);

/// Edge counts around the line graph / 2-distance graph identity.
///
/// The general identity
///   |E(L)| = |E(G2)| + |E| + 3T - C(n,2) + sum_{u !~ v} codeg(u,v)
/// only holds when no pair is at distance 3 or more; adding `far_pairs` to
/// the right-hand side makes it exact for every graph.
struct EdgeIdentityReport {
  std::uint64_t e_line = 0;
  std::uint64_t e_gamma2 = 0;
  std::uint64_t e = 0;
  std::uint64_t triangles = 0;
  std::uint64_t pairs_total = 0;
  std::uint64_t codegree_nonadjacent_sum = 0;
  /// Unordered pairs at distance >= 3, disconnected pairs included.
  std::uint64_t far_pairs = 0;
  bool c4_free = false;

  std::int64_t general_form_rhs() const;
  std::int64_t corrected_rhs() const {
    return general_form_rhs() + static_cast<std::int64_t>(far_pairs);
  }
  bool general_form_holds() const {
    return static_cast<std::int64_t>(e_line) == general_form_rhs();
  }
  bool corrected_form_holds() const {
    return static_cast<std::int64_t>(e_line) == corrected_rhs();
  }
  /// |E(L)| = |E(G2)| + 3T, claimed for C4-free graphs.
  bool c4_free_form_holds() const { return e_line == e_gamma2 + 3 * triangles; }
};

EdgeIdentityReport edge_identity_report(const Graph& g);

}  // namespace distgraph

#endif  // DISTGRAPH_DISTANCE_HPP_
