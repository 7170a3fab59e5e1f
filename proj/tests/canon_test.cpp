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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "distgraph/canon.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/enumerate.hpp"
#include "distgraph/generators.hpp"
#include "oracles.hpp"

namespace distgraph {
namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Independent edge-for-edge check of a claimed isomorphism g -> h.
bool maps_exactly(const Graph& g, const Graph& h, const Permutation& w) {
  const oracle::Matrix a = oracle::to_matrix(g);
  const oracle::Matrix b = oracle::to_matrix(h);
  std::vector<bool> hit(static_cast<std::size_t>(h.order()), false);
  for (int v = 0; v < g.order(); ++v) {
    if (w[v] < 0 || w[v] >= h.order() || hit[w[v]]) return false;
    hit[w[v]] = true;
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (a[u][v] != b[w[u]][w[v]]) return false;
    }
  }
  return true;
}

TEST(CanonicalForm, Examples) {
  const Graph c5 = basic_family(Family::kCycle, 5);
  EXPECT_EQ(canonical_form(c5), canonical_form(complement(c5)));
  const Graph c6 = basic_family(Family::kCycle, 6);
  const Graph two_triangles =
      disjoint_union(basic_family(Family::kCycle, 3), basic_family(Family::kCycle, 3));
  EXPECT_NE(canonical_form(c6), canonical_form(two_triangles));
  EXPECT_EQ(canonical_form(Graph()).n, 0);
  EXPECT_EQ(canonical_form(Graph(1)).bit_string(), "");
}

TEST(CanonicalForm, BitStringAndGraphAgree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 10, 0.5, rng);
    const CanonicalForm f = canonical_form(g);
    const Graph cg = f.graph();
    std::string bits;
    for (Vertex j = 1; j < g.order(); ++j) {
      for (Vertex i = 0; i < j; ++i) bits.push_back(cg.adjacent(i, j) ? '1' : '0');
    }
    ASSERT_EQ(f.bit_string(), bits);
    ASSERT_EQ(relabel(g, f.relabeling), cg);
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const Graph h = relabel(g, random_permutation(n, rng));
    const CanonicalForm fg = canonical_form(g);
    ASSERT_EQ(fg, canonical_form(h)) << "trial " << trial;
    // Idempotent: canonicalizing the canonical graph changes nothing.
    ASSERT_EQ(canonical_form(fg.graph()).graph(), fg.graph());
  }
}

TEST(CanonicalForm, InvariantOnStructuredLargerGraphs) {
  std::mt19937_64 rng(77);
  std::vector<Graph> graphs{paley(13), paley(29), named_graph(NamedGraphId::kPetersen),
                            basic_family(Family::kComplete, 20), Graph(30),
                            basic_family(Family::kCycle, 40)};
  graphs.push_back(prop23_construction(basic_family(Family::kPath, 5)));
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 5; ++trial) {
      ASSERT_EQ(canonical_form(g), canonical_form(relabel(g, random_permutation(g.order(), rng))));
    }
  }
}

TEST(CanonicalForm, ClassesMatchBruteForceInvariant) {
  // Canonical equality must coincide with the brute-force complete invariant.
  for (int n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, CanonicalForm> seen;
    oracle::for_each_labeled_graph(n, [&](const oracle::Matrix& m) {
      const std::uint64_t code = oracle::brute_canonical_code(m);
      const CanonicalForm f = canonical_form(oracle::from_matrix(m));
      const auto [it, inserted] = seen.emplace(code, f);
      if (!inserted) {
        ASSERT_EQ(it->second, f);
      }
    });
    std::vector<CanonicalForm> distinct;
    for (const auto& [code, f] : seen) distinct.push_back(f);
    std::sort(distinct.begin(), distinct.end());
    ASSERT_EQ(std::adjacent_find(distinct.begin(), distinct.end()), distinct.end());
  }
}

TEST(Isomorphism, Examples) {
  const Graph p4 = basic_family(Family::kPath, 4);
  const IsomorphismResult r = are_isomorphic(p4, complement(p4));
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(maps_exactly(p4, complement(p4), *r.witness));
  const Graph petersen = named_graph(NamedGraphId::kPetersen);
  EXPECT_FALSE(are_isomorphic(petersen, distance_graph(petersen, 2)).isomorphic);
  const IsomorphismResult self = are_isomorphic(petersen, petersen);
  ASSERT_TRUE(self.isomorphic);
  EXPECT_TRUE(maps_exactly(petersen, petersen, *self.witness));
  EXPECT_FALSE(are_isomorphic(Graph(3), Graph(4)).isomorphic);
}

// All pairs of enumerated classes on up to seven vertices, each compared
// after a random relabeling of the second graph.
TEST(Isomorphism, AgreesWithBruteForceOnAllSmallPairs) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> classes;
    enumerate_graphs(n, SearchFilter{}, [&](const Graph& g) { classes.push_back(g); });
    std::vector<std::uint64_t> codes;
    for (const Graph& g : classes) codes.push_back(oracle::brute_canonical_code(oracle::to_matrix(g)));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) {
        if (classes[i].edge_count() != classes[j].edge_count()) continue;
        const Graph h = relabel(classes[j], random_permutation(n, rng));
        const IsomorphismResult r = are_isomorphic(classes[i], h);
        ASSERT_EQ(r.isomorphic, codes[i] == codes[j]) << n << " " << i << " " << j;
        if (r.isomorphic) {
          ASSERT_TRUE(maps_exactly(classes[i], h, *r.witness));
        }
      }
    }
    // Random pairs straight through the brute-force checker.
    for (int trial = 0; trial < 30 && !classes.empty(); ++trial) {
      const Graph& a = classes[rng() % classes.size()];
      const Graph& b = classes[rng() % classes.size()];
      ASSERT_EQ(are_isomorphic(a, b).isomorphic,
                oracle::brute_isomorphic(oracle::to_matrix(a), oracle::to_matrix(b)));
    }
  }
}

TEST(Automorphisms, GeneratorsAreAutomorphismsAndOrbitsMatchBruteForce) {
  std::mt19937_64 rng(21);
  std::vector<Graph> graphs;
  for (int trial = 0; trial < 150; ++trial) {
    graphs.push_back(oracle::random_graph(1 + static_cast<int>(rng() % 8),
                                          static_cast<double>(rng() % 100) / 100.0, rng));
  }
  graphs.push_back(basic_family(Family::kCycle, 8));
  graphs.push_back(named_graph(NamedGraphId::kFig511));
  for (const Graph& g : graphs) {
    const CanonicalLabeling lab = canonical_labeling(g);
    for (const Permutation& p : lab.generators) ASSERT_EQ(relabel(g, p), g);
    ASSERT_EQ(lab.orbit, oracle::brute_orbits(oracle::to_matrix(g)));
  }
}

TEST(FindSubgraph, Examples) {
  const Graph c4 = basic_family(Family::kCycle, 4);
  const Graph diamond = named_graph(NamedGraphId::kDiamond);
  const auto loose = find_subgraph(c4, diamond, false);
  ASSERT_TRUE(loose.has_value());
  EXPECT_TRUE(is_embedding(c4, diamond, *loose, false));
  EXPECT_FALSE(find_subgraph(c4, diamond, true).has_value());

  const Graph c5c3 = named_graph(NamedGraphId::kC5C3);
  const auto tri = find_subgraph(basic_family(Family::kCycle, 3), c5c3, false);
  ASSERT_TRUE(tri.has_value());
  std::vector<Vertex> image = *tri;
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, (std::vector<Vertex>{0, 1, 5}));
  EXPECT_FALSE(find_subgraph(basic_family(Family::kComplete, 5), c5c3, false).has_value());
}

TEST(FindSubgraph, AgreesWithBruteForceSearch) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int pn = 1 + static_cast<int>(rng() % 4);
    const int hn = pn + static_cast<int>(rng() % 4);
    const Graph pattern = oracle::random_graph(pn, 0.6, rng);
    const Graph host = oracle::random_graph(hn, 0.5, rng);
    for (bool induced : {false, true}) {
      // Brute force: every injective map.
      bool exists = false;
      std::vector<Vertex> pick(static_cast<std::size_t>(hn));
      std::iota(pick.begin(), pick.end(), 0);
      do {
        const std::vector<Vertex> map(pick.begin(), pick.begin() + pn);
        if (is_embedding(pattern, host, map, induced)) exists = true;
      } while (!exists && std::next_permutation(pick.begin(), pick.end()));
      const auto found = find_subgraph(pattern, host, induced);
      ASSERT_EQ(found.has_value(), exists) << trial;
      if (found) {
        ASSERT_TRUE(is_embedding(pattern, host, *found, induced));
      }
    }
  }
}

}  // namespace
}  // namespace distgraph
