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

// Canonical labeling, isomorphism testing and small-pattern embedding.
//
// The canonical labeling is an individualization-refinement search: the
// vertex partition is refined to an equitable one, the first smallest
// non-singleton cell is individualized vertex by vertex, and the leaf whose
// relabeled adjacency has the lexicographically smallest upper-triangle bit
// string wins. Automorphisms discovered at equivalent leaves (and
// transpositions of twin vertices, found up front) prune the search.

#ifndef DISTGRAPH_CANON_HPP_
#define DISTGRAPH_CANON_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "distgraph/graph.hpp"

namespace distgraph {

/// Isomorphism-class key of a graph.
struct CanonicalForm {
  int n = 0;
  /// columns[j] has bit i (i < j) set when canonical vertices i and j are
  /// adjacent. Read column by column, these bits are the upper-triangle bit
  /// string x(0,1), x(0,2), x(1,2), x(0,3), ...
  std::vector<VertexMask> columns;
  /// relabeling[v] is the canonical label of original vertex v.
  Permutation relabeling;

  /// The upper-triangle bit string as '0'/'1' characters.
  std::string bit_string() const;

  /// The canonically labeled graph.
  Graph graph() const;

  /// Only n and the bit string take part in comparisons; the relabeling is a
  /// witness, not part of the key.
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.columns == b.columns;
  }
  /// Orders by n, then lexicographically by bit string.
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b);
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Generators of the automorphism group (perm[v] is the image of v).
  std::vector<Permutation> generators;
  /// orbit[v] is the smallest vertex in the automorphism orbit of v.
  std::vector<Vertex> orbit;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  /// witness[v] is the image in `h` of vertex v of `g`.
  std::optional<Permutation> witness;
};

/// Witnesses are checked edge-for-edge before being returned.
IsomorphismResult are_isomorphic(const Graph& g, const Graph& h);

/// Injective map from `pattern` into `host` (map[p] = host vertex) sending
/// edges to edges, and with `induced` also non-edges to non-edges.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& pattern,
                                                 const Graph& host,
                                                 bool induced);

}  // namespace distgraph

#endif  // DISTGRAPH_CANON_HPP_
