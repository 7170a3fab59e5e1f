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

// Forbidden and characteristic substructures, each with a witness.

#ifndef DISTGRAPH_PATTERNS_HPP_
#define DISTGRAPH_PATTERNS_HPP_

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "distgraph/graph.hpp"

namespace distgraph {

// Witness keys used in PatternReport::witnesses.
inline constexpr const char* kWitnessC4 = "c4";
inline constexpr const char* kWitnessDiamond = "diamond";
inline constexpr const char* kWitnessSharedTriangles = "shared_triangles";
inline constexpr const char* kWitnessInducedClaw = "induced_claw";
inline constexpr const char* kWitnessC5C3 = "c5c3";

struct PatternReport {
  bool has_c4_subgraph = false;
  bool has_diamond = false;
  bool triangles_pairwise_disjoint = true;
  bool has_induced_claw = false;
  bool has_c5c3_subgraph = false;
  /// Present only for flags that are set (for triangles, when two share a
  /// vertex). Layouts:
  ///   c4: the cycle in order (a, x, b, y)
  ///   diamond: (u, v, x, y) with u-v the edge lying in both triangles
  ///   shared_triangles: two triangles (a, b, c, d, e, f)
  ///   induced_claw: (center, leaf, leaf, leaf)
  ///   c5c3: images of forehead, left temple, left jaw, chin, right jaw,
  ///         right temple
  std::map<std::string, std::vector<Vertex>> witnesses;
};

PatternReport pattern_report(const Graph& g);

/// Some pair of distinct vertices has two or more common neighbors. Chords
/// are allowed: this is the subgraph (not induced) notion.
bool has_c4_subgraph(const Graph& g);
/// Some edge lies in two or more triangles.
bool has_diamond(const Graph& g);
bool triangles_pairwise_disjoint(const Graph& g);

/// Thrown by triangle_provenance when its input contains a 4-cycle.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ProvenanceKind { kClaw, kC6, kC5C3 };

const char* provenance_name(ProvenanceKind kind);

struct ProvenanceWitness {
  ProvenanceKind kind;
  /// claw: (center); c6: the cycle (a, x, b, y, c, z) alternating triangle
  /// vertices and midpoints; c5c3: the same six vertices with exactly one
  /// midpoint chord.
  std::vector<Vertex> vertices;
};

struct TriangleProvenance {
  /// A triangle of the 2-distance graph, ascending.
  std::array<Vertex, 3> triangle;
  /// Empty when no explanation was found.
  std::vector<ProvenanceWitness> witnesses;
};

/// Explains every triangle of distance_graph(g, 2) by an induced claw, an
/// induced 6-cycle or a C5|C3 in `g`. Throws PreconditionError when `g` has a
/// 4-cycle subgraph.
std::vector<TriangleProvenance> triangle_provenance(const Graph& g);

}  // namespace distgraph

#endif  // DISTGRAPH_PATTERNS_HPP_
