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

#include "distgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace distgraph {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside 0.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::out_of_range("edge endpoint outside 0.." +
                              std::to_string(n - 1) + ": (" +
                              std::to_string(e.u) + "," + std::to_string(e.v) +
                              ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
    }
    g.rows_[e.u] |= vertex_bit(e.v);
    g.rows_[e.v] |= vertex_bit(e.u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexMask> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("row count does not match vertex count");
  }
  Graph g(n);
  const VertexMask all = prefix_mask(n);
  for (Vertex v = 0; v < n; ++v) {
    const VertexMask row = rows[v];
    if ((row & ~all) != 0) {
      throw std::invalid_argument("row " + std::to_string(v) +
                                  " names a vertex outside the graph");
    }
    if ((row & vertex_bit(v)) != 0) {
      throw std::invalid_argument("loop at vertex " + std::to_string(v));
    }
    for (VertexMask rest = row; rest != 0; rest &= rest - 1) {
      const Vertex w = std::countr_zero(rest);
      if ((rows[w] & vertex_bit(v)) == 0) {
        throw std::invalid_argument("asymmetric adjacency between " +
                                    std::to_string(v) + " and " +
                                    std::to_string(w));
      }
    }
    g.rows_[v] = row;
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (VertexMask rest = rows_[u] & ~prefix_mask(u + 1); rest != 0;
         rest &= rest - 1) {
      out.push_back({u, std::countr_zero(rest)});
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph Graph::with_vertex(VertexMask neighbors) const {
  if (n_ >= kMaxVertices) {
    throw std::invalid_argument("graph already has the maximum order");
  }
  if ((neighbors & ~all_vertices()) != 0) {
    throw std::out_of_range("new vertex adjacent to a missing vertex");
  }
  Graph g = *this;
  const Vertex x = n_;
  g.n_ = n_ + 1;
  g.rows_[x] = neighbors;
  for (VertexMask rest = neighbors; rest != 0; rest &= rest - 1) {
    g.rows_[std::countr_zero(rest)] |= vertex_bit(x);
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ &&
         std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<VertexMask, kMaxVertices> rows{};
  for (Vertex v = 0; v < n; ++v) {
    rows[v] = ~g.neighbors(v) & g.all_vertices() & ~vertex_bit(v);
  }
  return Graph::from_rows(n, std::span(rows.data(), static_cast<std::size_t>(n)));
}

Graph induced_subgraph(const Graph& g, VertexMask vs) {
  if ((vs & ~g.all_vertices()) != 0) {
    throw std::out_of_range("induced vertex set names a vertex outside the graph");
  }
  std::vector<Vertex> list;
  for (VertexMask rest = vs; rest != 0; rest &= rest - 1) {
    list.push_back(std::countr_zero(rest));
  }
  std::array<VertexMask, kMaxVertices> rows{};
  const int k = static_cast<int>(list.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(list[i], list[j])) rows[i] |= vertex_bit(j);
    }
  }
  return Graph::from_rows(k, std::span(rows.data(), static_cast<std::size_t>(k)));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  VertexMask mask = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("induced vertex " + std::to_string(v) +
                              " outside the graph");
    }
    mask |= vertex_bit(v);
  }
  return induced_subgraph(g, mask);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("permutation length does not match order");
  }
  VertexMask seen = 0;
  for (Vertex image : perm) {
    if (image < 0 || image >= n || (seen & vertex_bit(image)) != 0) {
      throw std::invalid_argument("not a permutation of the vertex set");
    }
    seen |= vertex_bit(image);
  }
  std::array<VertexMask, kMaxVertices> rows{};
  for (Vertex v = 0; v < n; ++v) {
    VertexMask mapped = 0;
    for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
      mapped |= vertex_bit(perm[std::countr_zero(rest)]);
    }
    rows[perm[v]] = mapped;
  }
  return Graph::from_rows(n, std::span(rows.data(), static_cast<std::size_t>(n)));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::array<VertexMask, kMaxVertices> rows{};
  for (Vertex v = 0; v < a.order(); ++v) rows[v] = a.neighbors(v);
  for (Vertex v = 0; v < b.order(); ++v) {
    rows[a.order() + v] = b.neighbors(v) << a.order();
  }
  return Graph::from_rows(n, std::span(rows.data(), static_cast<std::size_t>(n)));
}

bool is_embedding(const Graph& pattern, const Graph& host,
                  std::span<const Vertex> map, bool induced) {
  const int k = pattern.order();
  if (map.size() != static_cast<std::size_t>(k)) return false;
  VertexMask used = 0;
  for (Vertex image : map) {
    if (image < 0 || image >= host.order()) return false;
    if ((used & vertex_bit(image)) != 0) return false;
    used |= vertex_bit(image);
  }
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      const bool in_pattern = pattern.adjacent(a, b);
      const bool in_host = host.adjacent(map[a], map[b]);
      if (in_pattern && !in_host) return false;
      if (induced && !in_pattern && in_host) return false;
    }
  }
  return true;
}

}  // namespace distgraph
