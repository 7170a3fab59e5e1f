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

#include "distgraph/patterns.hpp"

#include <optional>

#include "distgraph/canon.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/generators.hpp"

namespace distgraph {

namespace {

Vertex lowest(VertexMask m) { return std::countr_zero(m); }

std::optional<std::vector<Vertex>> find_c4(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      VertexMask common = g.neighbors(a) & g.neighbors(b);
      if (std::popcount(common) >= 2) {
        const Vertex x = lowest(common);
        common &= common - 1;
        return std::vector<Vertex>{a, x, b, lowest(common)};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_diamond(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (VertexMask rest = g.neighbors(u) & ~prefix_mask(u + 1); rest != 0;
         rest &= rest - 1) {
      const Vertex v = lowest(rest);
      VertexMask common = g.neighbors(u) & g.neighbors(v);
      if (std::popcount(common) >= 2) {
        const Vertex x = lowest(common);
        common &= common - 1;
        return std::vector<Vertex>{u, v, x, lowest(common)};
      }
    }
  }
  return std::nullopt;
}

// Two distinct triangles sharing at least one vertex.
std::optional<std::vector<Vertex>> find_shared_triangles(const Graph& g) {
  // Any vertex in two triangles, or any edge in two triangles, is a witness;
  // both reduce to: a vertex whose neighborhood spans two or more edges.
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexMask nb = g.neighbors(v);
    std::vector<Edge> inside;
    for (VertexMask rest = nb; rest != 0 && inside.size() < 2; rest &= rest - 1) {
      const Vertex a = lowest(rest);
      for (VertexMask more = g.neighbors(a) & nb & ~prefix_mask(a + 1);
           more != 0 && inside.size() < 2; more &= more - 1) {
        inside.push_back({a, lowest(more)});
      }
    }
    if (inside.size() >= 2) {
      return std::vector<Vertex>{v, inside[0].u, inside[0].v,
                                 v, inside[1].u, inside[1].v};
    }
  }
  return std::nullopt;
}

Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

bool has_c4_subgraph(const Graph& g) { return find_c4(g).has_value(); }
bool has_diamond(const Graph& g) { return find_diamond(g).has_value(); }
bool triangles_pairwise_disjoint(const Graph& g) {
  return !find_shared_triangles(g).has_value();
}

PatternReport pattern_report(const Graph& g) {
  PatternReport r;
  if (auto w = find_c4(g)) {
    r.has_c4_subgraph = true;
    r.witnesses[kWitnessC4] = std::move(*w);
  }
  if (auto w = find_diamond(g)) {
    r.has_diamond = true;
    r.witnesses[kWitnessDiamond] = std::move(*w);
  }
  if (auto w = find_shared_triangles(g)) {
    r.triangles_pairwise_disjoint = false;
    r.witnesses[kWitnessSharedTriangles] = std::move(*w);
  }
  if (auto w = find_subgraph(claw(), g, /*induced=*/true)) {
    r.has_induced_claw = true;
    r.witnesses[kWitnessInducedClaw] = std::move(*w);
  }
  if (auto w = find_subgraph(named_graph(NamedGraphId::kC5C3), g,
                             /*induced=*/false)) {
    r.has_c5c3_subgraph = true;
    r.witnesses[kWitnessC5C3] = std::move(*w);
  }
  return r;
}

const char* provenance_name(ProvenanceKind kind) {
  switch (kind) {
    case ProvenanceKind::kClaw:
      return "claw";
    case ProvenanceKind::kC6:
      return "c6";
    case ProvenanceKind::kC5C3:
      return "c5c3";
  }
  return "unknown";
}

std::vector<TriangleProvenance> triangle_provenance(const Graph& g) {
  if (auto w = find_c4(g)) {
    throw PreconditionError(
        "triangle provenance needs a graph without 4-cycles; found one through "
        "vertices " +
        std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
        std::to_string((*w)[2]) + "," + std::to_string((*w)[3]));
  }
  const Graph g2 = distance_graph(g, 2);
  std::vector<TriangleProvenance> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (VertexMask rb = g2.neighbors(a) & ~prefix_mask(a + 1); rb != 0;
         rb &= rb - 1) {
      const Vertex b = lowest(rb);
      for (VertexMask rc = g2.neighbors(a) & g2.neighbors(b) & ~prefix_mask(b + 1);
           rc != 0; rc &= rc - 1) {
        const Vertex c = lowest(rc);
        TriangleProvenance tp{{a, b, c}, {}};

        const VertexMask center = g.neighbors(a) & g.neighbors(b) & g.neighbors(c);
        for (VertexMask rest = center; rest != 0; rest &= rest - 1) {
          tp.witnesses.push_back({ProvenanceKind::kClaw, {lowest(rest)}});
        }
        // Each pair at distance two has a unique midpoint in a C4-free graph.
        const Vertex x = lowest(g.neighbors(a) & g.neighbors(b));
        const Vertex y = lowest(g.neighbors(b) & g.neighbors(c));
        const Vertex z = lowest(g.neighbors(c) & g.neighbors(a));
        if (center == 0) {
          const int chords = static_cast<int>(g.adjacent(x, y)) +
                             static_cast<int>(g.adjacent(y, z)) +
                             static_cast<int>(g.adjacent(z, x));
          std::vector<Vertex> six{a, x, b, y, c, z};
          if (chords == 0) {
            tp.witnesses.push_back({ProvenanceKind::kC6, std::move(six)});
          } else if (chords == 1) {
            tp.witnesses.push_back({ProvenanceKind::kC5C3, std::move(six)});
          }
        }
        out.push_back(std::move(tp));
      }
    }
  }
  return out;
}

}  // namespace distgraph
