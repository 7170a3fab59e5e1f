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

#ifndef DISTGRAPH_GENERATORS_HPP_
#define DISTGRAPH_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "distgraph/graph.hpp"

namespace distgraph {

enum class Family { kCycle, kPath, kComplete };

/// Standard graphs on 0..n-1: cycle edges {i, i+1 mod n}, path edges
/// {i, i+1}, complete. Throws std::invalid_argument for a cycle with n < 3
/// or a path/complete graph with n < 1.
Graph basic_family(Family kind, int n);

/// Glues `h` onto `g` by identifying h_edge.u with g_edge.u and h_edge.v with
/// g_edge.v. Vertices of `g` keep their labels; the remaining vertices of `h`
/// follow in ascending order. Throws std::invalid_argument when either pair
/// is not an edge.
Graph edged_product(const Graph& g, Edge g_edge, const Graph& h, Edge h_edge);

/// Lowest edge in index order; throws std::invalid_argument when edgeless.
Edge first_edge(const Graph& g);

enum class NamedGraphId { kC5C3, kDiamond, kFig511, kFig512, kPetersen };

std::string_view named_graph_name(NamedGraphId id);
std::optional<NamedGraphId> parse_named_graph(std::string_view name);

/// Fixed fixtures:
///  - kC5C3: hexagon 0..5 (forehead 0, left temple 1, left jaw 2, chin 3,
///    right jaw 4, right temple 5) plus the temple chord 1-5.
///  - kDiamond: K4 minus the edge 2-3; 0 and 1 have degree three.
///  - kFig511: outer 4-cycle A,B,C,D = 0..3; inner vertices E,F,G,H = 4..7
///    with chords E-G and F-H; spokes A-E, E-B, B-F, F-C, C-G, G-D, D-H, H-A.
///  - kFig512: kFig511 plus a center vertex 8 adjacent to E, F, G, H.
///  - kPetersen: Kneser graph on the 2-subsets of {0..4} in lexicographic
///    order, adjacent when disjoint.
Graph named_graph(NamedGraphId id);

/// Apex 4n; blocks [0,n) and [n,2n) are copies of `g`, blocks [2n,3n) and
/// [3n,4n) copies of its complement. The apex sees blocks 1 and 2, and blocks
/// 1-3, 2-4 and 3-4 are completely joined. Block 1 induces `g`.
Graph prop23_construction(const Graph& g);

/// Paley graph on Z_q for a prime q = 1 (mod 4). Throws std::invalid_argument
/// otherwise (prime powers are not supported).
Graph paley(int q);

bool is_prime(int q);

/// G(n, p) sample. The stream is std::mt19937_64 seeded with `seed`; pairs
/// are visited in graph6 order (j = 1..n-1, i = 0..j-1) and the pair becomes
/// an edge when (draw >> 11) * 2^-53 < p. Identical on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace distgraph

#endif  // DISTGRAPH_GENERATORS_HPP_
