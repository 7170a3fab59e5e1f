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

#include "distgraph/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace distgraph {

Graph basic_family(Family kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::kCycle:
      if (n < 3) {
        throw std::invalid_argument("a cycle needs at least 3 vertices, got " +
                                    std::to_string(n));
      }
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case Family::kPath:
      if (n < 1) throw std::invalid_argument("a path needs at least 1 vertex");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::kComplete:
      if (n < 1) throw std::invalid_argument("a complete graph needs at least 1 vertex");
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      break;
  }
  return Graph::from_edges(n, edges);
}

Edge first_edge(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexMask later = g.neighbors(u) & ~prefix_mask(u + 1);
    if (later != 0) return {u, std::countr_zero(later)};
  }
  throw std::invalid_argument("graph has no edges");
}

Graph edged_product(const Graph& g, Edge g_edge, const Graph& h, Edge h_edge) {
  auto is_edge = [](const Graph& x, Edge e) {
    return e.u >= 0 && e.v >= 0 && e.u < x.order() && e.v < x.order() &&
           x.adjacent(e.u, e.v);
  };
  if (!is_edge(g, g_edge)) {
    throw std::invalid_argument("first argument pair is not an edge of its graph");
  }
  if (!is_edge(h, h_edge)) {
    throw std::invalid_argument("second argument pair is not an edge of its graph");
  }
  std::vector<Vertex> image(static_cast<std::size_t>(h.order()));
  Vertex next = g.order();
  for (Vertex v = 0; v < h.order(); ++v) {
    if (v == h_edge.u) {
      image[v] = g_edge.u;
    } else if (v == h_edge.v) {
      image[v] = g_edge.v;
    } else {
      image[v] = next++;
    }
  }
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({image[e.u], image[e.v]});
  return Graph::from_edges(next, edges);
}

std::string_view named_graph_name(NamedGraphId id) {
  switch (id) {
    case NamedGraphId::kC5C3:
      return "c5c3";
    case NamedGraphId::kDiamond:
      return "diamond";
    case NamedGraphId::kFig511:
      return "fig511";
    case NamedGraphId::kFig512:
      return "fig512";
    case NamedGraphId::kPetersen:
      return "petersen";
  }
  return "unknown";
}

std::optional<NamedGraphId> parse_named_graph(std::string_view name) {
  for (NamedGraphId id : {NamedGraphId::kC5C3, NamedGraphId::kDiamond,
                          NamedGraphId::kFig511, NamedGraphId::kFig512,
                          NamedGraphId::kPetersen}) {
    if (named_graph_name(id) == name) return id;
  }
  return std::nullopt;
}

Graph named_graph(NamedGraphId id) {
  enum : Vertex { A, B, C, D, E, F, G, H, O };
  switch (id) {
    case NamedGraphId::kC5C3:
      return Graph::from_edges(
          6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}});
    case NamedGraphId::kDiamond:
      return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    case NamedGraphId::kFig511:
      return Graph::from_edges(8, {{A, B}, {B, C}, {C, D}, {D, A},
                                   {A, E}, {E, B}, {B, F}, {F, C},
                                   {C, G}, {G, D}, {D, H}, {H, A},
                                   {E, G}, {F, H}});
    case NamedGraphId::kFig512:
      return Graph::from_edges(9, {{A, B}, {B, C}, {C, D}, {D, A},
                                   {A, E}, {E, B}, {B, F}, {F, C},
                                   {C, G}, {G, D}, {D, H}, {H, A},
                                   {E, G}, {F, H},
                                   {O, E}, {O, F}, {O, G}, {O, H}});
    case NamedGraphId::kPetersen: {
      std::vector<std::pair<int, int>> subsets;
      for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
      }
      std::vector<Edge> edges;
      for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
          const auto [a, b] = subsets[i];
          const auto [c, d] = subsets[j];
          if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
        }
      }
      return Graph::from_edges(10, edges);
    }
  }
  throw std::invalid_argument("unknown named graph");
}

Graph prop23_construction(const Graph& g) {
  const int n = g.order();
  const Graph gc = complement(g);
  const Vertex apex = 4 * n;
  std::vector<Edge> edges;
  auto block = [n](int b, Vertex v) { return b * n + v; };
  for (const Edge& e : g.edges()) {
    edges.push_back({block(0, e.u), block(0, e.v)});
    edges.push_back({block(1, e.u), block(1, e.v)});
  }
  for (const Edge& e : gc.edges()) {
    edges.push_back({block(2, e.u), block(2, e.v)});
    edges.push_back({block(3, e.u), block(3, e.v)});
  }
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back({apex, block(0, v)});
    edges.push_back({apex, block(1, v)});
    for (Vertex w = 0; w < n; ++w) {
      edges.push_back({block(0, v), block(2, w)});
      edges.push_back({block(1, v), block(3, w)});
      edges.push_back({block(2, v), block(3, w)});
    }
  }
  return Graph::from_edges(4 * n + 1, edges);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

Graph paley(int q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("paley order must be prime, got " +
                                std::to_string(q));
  }
  if (q % 4 != 1) {
    throw std::invalid_argument("paley order must be 1 mod 4, got " +
                                std::to_string(q));
  }
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[(x * x) % q] = true;
  std::vector<Edge> edges;
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      if (residue[b - a]) edges.push_back({a, b});
    }
  }
  return Graph::from_edges(q, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace distgraph
