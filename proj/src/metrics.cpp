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

#include "distgraph/metrics.hpp"

#include <algorithm>
#include <limits>

#include "distgraph/kernels.hpp"

namespace distgraph {

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexMask seen = vertex_bit(source);
  VertexMask frontier = seen;
  for (int d = 0; frontier != 0; ++d) {
    for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
      dist[std::countr_zero(rest)] = d;
    }
    frontier = kernels::select_or(g.rows(), frontier) & ~seen;
    seen |= frontier;
  }
  return dist;
}

VertexMask sphere(const Graph& g, Vertex source, int k) {
  VertexMask seen = vertex_bit(source);
  VertexMask frontier = seen;
  for (int d = 0; d < k && frontier != 0; ++d) {
    frontier = kernels::select_or(g.rows(), frontier) & ~seen;
    seen |= frontier;
  }
  return frontier;
}

ExtendedNat diameter(const Graph& g) {
  const int n = g.order();
  std::uint64_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    VertexMask seen = vertex_bit(s);
    VertexMask frontier = seen;
    std::uint64_t depth = 0;
    while (true) {
      frontier = kernels::select_or(g.rows(), frontier) & ~seen;
      if (frontier == 0) break;
      seen |= frontier;
      ++depth;
    }
    if (seen != g.all_vertices()) return ExtendedNat::infinity();
    best = std::max(best, depth);
  }
  return best;
}

ExtendedNat girth(const Graph& g) {
  // BFS from every root; a non-tree edge (u,w) closes a closed walk of length
  // dist[u] + dist[w] + 1 through the root, and the minimum over all roots is
  // the girth.
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex u = queue[head++];
      if (2 * dist[u] >= best) break;
      for (VertexMask rest = g.neighbors(u); rest != 0; rest &= rest - 1) {
        const Vertex w = std::countr_zero(rest);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return ExtendedNat::infinity();
  return static_cast<std::uint64_t>(best);
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (VertexMask rest = g.neighbors(u) & ~prefix_mask(u + 1); rest != 0;
         rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      count += std::popcount(g.neighbors(u) & g.neighbors(v) &
                             ~prefix_mask(v + 1));
    }
  }
  return count;
}

int component_count(const Graph& g) {
  int count = 0;
  VertexMask unseen = g.all_vertices();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      frontier = kernels::select_or(g.rows(), frontier) & ~comp;
      comp |= frontier;
    }
    unseen &= ~comp;
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;

  // Iterative Hopcroft-Tarjan articulation point search from vertex 0.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<VertexMask> pending(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  int timer = 0;
  int root_children = 0;

  disc[0] = low[0] = timer++;
  pending[0] = g.neighbors(0);
  stack.push_back(0);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    if (pending[u] != 0) {
      const Vertex w = std::countr_zero(pending[u]);
      pending[u] &= pending[u] - 1;
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        pending[w] = g.neighbors(w);
        stack.push_back(w);
        if (u == 0) ++root_children;
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) return false;
    }
  }
  return root_children < 2;
}

MetricsReport metrics(const Graph& g) {
  MetricsReport r;
  r.diameter = diameter(g);
  r.girth = girth(g);
  r.triangle_count = triangle_count(g);
  r.max_degree = g.max_degree();
  for (Vertex v = 0; v < g.order(); ++v) ++r.degree_histogram[g.degree(v)];
  r.component_count = component_count(g);
  r.two_connected = is_two_connected(g);
  return r;
}

}  // namespace distgraph
