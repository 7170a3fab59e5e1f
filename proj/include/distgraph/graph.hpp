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

#ifndef DISTGRAPH_GRAPH_HPP_
#define DISTGRAPH_GRAPH_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace distgraph {

/// Vertices are dense indices 0..n-1.
using Vertex = int;

/// One bit per vertex; bit v set means vertex v is in the set.
using VertexMask = std::uint64_t;

/// Adjacency is stored as one 64-bit row per vertex, which caps the order.
inline constexpr int kMaxVertices = 64;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }

/// Mask of vertices 0..n-1.
constexpr VertexMask prefix_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex permutation: perm[v] is the new label of v.
using Permutation = std::vector<Vertex>;

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Rows are symmetric bitsets with an empty diagonal. Instances are plain
/// values and can be shared freely between threads.
class Graph {
 public:
  /// The graph on zero vertices.
  Graph() = default;

  /// Edgeless graph on `n` vertices. Throws std::invalid_argument when `n`
  /// is negative or exceeds kMaxVertices.
  explicit Graph(int n);

  /// Symmetric closure of `edges`; duplicate pairs collapse. Throws
  /// std::out_of_range for an endpoint outside 0..n-1 and
  /// std::invalid_argument for a loop.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows. Throws std::invalid_argument unless the
  /// rows are symmetric, loop-free and confined to 0..n-1.
  static Graph from_rows(int n, std::span<const VertexMask> rows);

  int order() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
  }
  VertexMask neighbors(Vertex v) const {
    return rows_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return std::popcount(neighbors(v)); }
  VertexMask all_vertices() const { return prefix_mask(n_); }

  std::span<const VertexMask> rows() const {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }

  /// Edges (u < v) in ascending lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  int max_degree() const;

  /// Copy of this graph with one new vertex `n` adjacent to `neighbors`.
  Graph with_vertex(VertexMask neighbors) const;

  /// Labeled equality.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

/// Graph with an edge exactly where `g` has none.
Graph complement(const Graph& g);

/// Subgraph induced by `vs`, relabeled 0..|vs|-1 by ascending original index.
/// Throws std::out_of_range when `vs` names a vertex outside `g`.
Graph induced_subgraph(const Graph& g, VertexMask vs);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

/// Image of `g` under `perm` (vertex v becomes perm[v]). Throws
/// std::invalid_argument unless `perm` is a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; the vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// True when `map` sends every edge of `pattern` to an edge of `host` and is
/// injective. With `induced`, non-edges must also map to non-edges.
bool is_embedding(const Graph& pattern, const Graph& host,
                  std::span<const Vertex> map, bool induced);

/// A natural number or infinity. Infinity compares above every natural.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t value) : value_(value) {}  // NOLINT

  static constexpr ExtendedNat infinity() {
    ExtendedNat x;
    x.value_.reset();
    return x;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }

  /// Throws std::bad_optional_access when infinite.
  constexpr std::uint64_t value() const { return value_.value(); }

  friend constexpr bool operator==(const ExtendedNat&,
                                   const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a,
                                                    const ExtendedNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=>
             static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

}  // namespace distgraph

#endif  // DISTGRAPH_GRAPH_HPP_
