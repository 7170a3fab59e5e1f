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

#ifndef DISTGRAPH_CAYLEY_HPP_
#define DISTGRAPH_CAYLEY_HPP_

#include <optional>
#include <vector>

#include "distgraph/graph.hpp"

namespace distgraph {

using Element = int;

/// Finite group given by its multiplication table.
class GroupTable {
 public:
  /// Validates closure, identity, inverses and (for order <= 64)
  /// associativity. Throws std::invalid_argument on failure.
  explicit GroupTable(std::vector<std::vector<Element>> mul);

  int order() const { return static_cast<int>(mul_.size()); }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element identity() const { return identity_; }
  Element inv(Element a) const { return inv_[a]; }

 private:
  std::vector<std::vector<Element>> mul_;
  Element identity_ = 0;
  std::vector<Element> inv_;
};

enum class GroupKind { kCyclic, kDihedral };

/// cyclic m: element i is i mod m, m >= 1.
/// dihedral m: order 2m, m >= 3; element r^i s^j has index i + m*j, with
/// (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d).
/// Throws std::invalid_argument for degenerate m.
GroupTable group_table(GroupKind kind, int m);

/// Identity-free, inverse-closed set of group elements, kept sorted.
class ConnectionSet {
 public:
  /// Throws std::invalid_argument when an element is out of range, equals the
  /// identity, or has its inverse missing.
  ConnectionSet(const GroupTable& g, std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  bool contains(Element x) const;

 private:
  std::vector<Element> elements_;
};

/// Edge {x, y} when inv(x) * y lies in `s`. Order must not exceed 64.
Graph cayley_graph(const GroupTable& g, const ConnectionSet& s);

/// All products of exactly `n` elements of `s` (with repetition), ascending.
/// Throws std::invalid_argument for n < 1.
std::vector<Element> product_set(const GroupTable& g, const ConnectionSet& s,
                                 int n);

struct DistanceIdentityReport {
  bool holds = false;
  /// S^2 minus (S and the identity).
  std::vector<Element> connection_set_used;
  Graph distance_graph;
  Graph predicted;
};

/// Compares distance_graph(Cay(G,S), 2) with Cay(G, S^2 \ (S u {1})) as
/// labeled graphs.
DistanceIdentityReport distance_identity_check(const GroupTable& g,
                                               const ConnectionSet& s);

/// Exhaustive search for a group automorphism mapping `from` onto `to`
/// (image of the set equals the set). Returns the automorphism as an element
/// map. Intended for small orders; the search enumerates images of a
/// generating set.
std::optional<std::vector<Element>> automorphism_mapping(
    const GroupTable& g, const std::vector<Element>& from,
    const std::vector<Element>& to);

}  // namespace distgraph

#endif  // DISTGRAPH_CAYLEY_HPP_
