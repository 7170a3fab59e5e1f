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

#include "distgraph/distance.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "distgraph/canon.hpp"
#include "distgraph/kernels.hpp"
#include "distgraph/metrics.hpp"
#include "distgraph/patterns.hpp"

namespace distgraph {

Graph distance_graph(const Graph& g, int k) {
  if (k < 1) {
    throw std::invalid_argument("distance must be at least 1, got " +
                                std::to_string(k));
  }
  const int n = g.order();
  std::array<VertexMask, kMaxVertices> rows{};
  if (k == 2) {
    kernels::two_step(g.rows(), std::span(rows.data(), static_cast<std::size_t>(n)));
    for (Vertex v = 0; v < n; ++v) rows[v] &= ~g.neighbors(v) & ~vertex_bit(v);
  } else {
    for (Vertex v = 0; v < n; ++v) rows[v] = sphere(g, v, k);
  }
  return Graph::from_rows(n, std::span(rows.data(), static_cast<std::size_t>(n)));
}

SelfDistanceResult is_self_two_distance(const Graph& g) {
  SelfDistanceResult result;
  const Graph g2 = distance_graph(g, 2);
  if (g2.edge_count() != g.edge_count()) return result;
  std::vector<int> d1 = g.degrees();
  std::vector<int> d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return result;
  IsomorphismResult iso = are_isomorphic(g, g2);
  result.holds = iso.isomorphic;
  result.witness = std::move(iso.witness);
  return result;
}

std::int64_t EdgeIdentityReport::general_form_rhs() const {
  return static_cast<std::int64_t>(e_gamma2) + static_cast<std::int64_t>(e) +
         3 * static_cast<std::int64_t>(triangles) -
         static_cast<std::int64_t>(pairs_total) +
         static_cast<std::int64_t>(codegree_nonadjacent_sum);
}

EdgeIdentityReport edge_identity_report(const Graph& g) {
  EdgeIdentityReport r;
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t d = static_cast<std::uint64_t>(g.degree(v));
    r.e_line += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  r.e = g.edge_count();
  r.e_gamma2 = distance_graph(g, 2).edge_count();
  r.triangles = triangle_count(g);
  r.pairs_total = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;

  std::array<std::uint8_t, kMaxVertices> codeg{};
  for (Vertex u = 0; u < n; ++u) {
    kernels::masked_popcount(g.rows(), g.neighbors(u),
                             std::span(codeg.data(), codeg.size()));
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) r.codegree_nonadjacent_sum += codeg[v];
    }
    const VertexMask within_two = vertex_bit(u) | g.neighbors(u) |
                                  kernels::select_or(g.rows(), g.neighbors(u));
    r.far_pairs += std::popcount(~within_two & g.all_vertices() &
                                 ~prefix_mask(u + 1));
  }
  r.c4_free = !has_c4_subgraph(g);
  return r;
}

}  // namespace distgraph
