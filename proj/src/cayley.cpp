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

#include "distgraph/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "distgraph/distance.hpp"

namespace distgraph {

GroupTable::GroupTable(std::vector<std::vector<Element>> mul)
    : mul_(std::move(mul)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("a group has at least one element");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("multiplication table is not square");
    }
    for (Element x : row) {
      if (x < 0 || x >= n) {
        throw std::invalid_argument("multiplication table leaves the group");
      }
    }
  }
  identity_ = -1;
  for (Element e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = mul_[e][x] == x && mul_[x][e] == x;
    }
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("no identity element");
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (mul_[x][y] == identity_ && mul_[y][x] == identity_) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) {
      throw std::invalid_argument("element " + std::to_string(x) +
                                  " has no inverse");
    }
  }
  if (n <= 64) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
            throw std::invalid_argument("multiplication is not associative");
          }
        }
      }
    }
  }
}

GroupTable group_table(GroupKind kind, int m) {
  std::vector<std::vector<Element>> mul;
  switch (kind) {
    case GroupKind::kCyclic:
      if (m < 1) throw std::invalid_argument("cyclic group needs m >= 1");
      mul.assign(static_cast<std::size_t>(m), std::vector<Element>(m));
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
      }
      break;
    case GroupKind::kDihedral:
      if (m < 3) throw std::invalid_argument("dihedral group needs m >= 3");
      mul.assign(static_cast<std::size_t>(2 * m), std::vector<Element>(2 * m));
      for (int x = 0; x < 2 * m; ++x) {
        for (int y = 0; y < 2 * m; ++y) {
          const int a = x % m;
          const int b = x / m;
          const int c = y % m;
          const int d = y / m;
          const int rot = ((a + (b == 0 ? c : -c)) % m + m) % m;
          mul[x][y] = rot + m * ((b + d) % 2);
        }
      }
      break;
  }
  return GroupTable(std::move(mul));
}

ConnectionSet::ConnectionSet(const GroupTable& g, std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (Element x : elements_) {
    if (x < 0 || x >= g.order()) {
      throw std::invalid_argument("connection set element " +
                                  std::to_string(x) + " outside the group");
    }
    if (x == g.identity()) {
      throw std::invalid_argument("connection set contains the identity");
    }
  }
  for (Element x : elements_) {
    if (!contains(g.inv(x))) {
      throw std::invalid_argument("connection set is not inverse-closed: " +
                                  std::to_string(x) + " lacks its inverse " +
                                  std::to_string(g.inv(x)));
    }
  }
}

bool ConnectionSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

Graph cayley_graph(const GroupTable& g, const ConnectionSet& s) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (s.contains(g.mul(g.inv(x), y))) edges.push_back({x, y});
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Element> product_set(const GroupTable& g, const ConnectionSet& s,
                                 int n) {
  if (n < 1) throw std::invalid_argument("product length must be at least 1");
  std::vector<bool> current(static_cast<std::size_t>(g.order()), false);
  for (Element x : s.elements()) current[x] = true;
  for (int step = 1; step < n; ++step) {
    std::vector<bool> next(current.size(), false);
    for (Element x = 0; x < g.order(); ++x) {
      if (!current[x]) continue;
      for (Element y : s.elements()) next[g.mul(x, y)] = true;
    }
    current = std::move(next);
  }
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (current[x]) out.push_back(x);
  }
  return out;
}

DistanceIdentityReport distance_identity_check(const GroupTable& g,
                                               const ConnectionSet& s) {
  DistanceIdentityReport r;
  for (Element x : product_set(g, s, 2)) {
    if (x != g.identity() && !s.contains(x)) r.connection_set_used.push_back(x);
  }
  const Graph cay = cayley_graph(g, s);
  r.distance_graph = distance_graph(cay, 2);
  r.predicted = cayley_graph(g, ConnectionSet(g, r.connection_set_used));
  r.holds = r.distance_graph == r.predicted;
  return r;
}

std::optional<std::vector<Element>> automorphism_mapping(
    const GroupTable& g, const std::vector<Element>& from,
    const std::vector<Element>& to) {
  if (from.size() != to.size()) return std::nullopt;
  const int n = g.order();

  // Greedy generating set, and every element as a word: element = parent *
  // generator, built breadth-first from the identity.
  std::vector<Element> gens;
  std::vector<Element> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  std::vector<Element> order_of_discovery;
  auto closure = [&]() {
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(via.begin(), via.end(), -1);
    order_of_discovery.assign(1, g.identity());
    parent[g.identity()] = g.identity();
    for (std::size_t head = 0; head < order_of_discovery.size(); ++head) {
      const Element x = order_of_discovery[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(x, gens[k]);
        if (parent[y] < 0) {
          parent[y] = x;
          via[y] = static_cast<int>(k);
          order_of_discovery.push_back(y);
        }
      }
    }
  };
  closure();
  for (Element x = 0; x < n; ++x) {
    if (parent[x] < 0) {
      gens.push_back(x);
      closure();
    }
  }

  std::vector<bool> target(static_cast<std::size_t>(n), false);
  for (Element x : to) target[x] = true;

  std::vector<Element> images(gens.size(), 0);
  std::vector<Element> phi(static_cast<std::size_t>(n));
  auto try_images = [&]() -> bool {
    phi[g.identity()] = g.identity();
    for (std::size_t i = 1; i < order_of_discovery.size(); ++i) {
      const Element y = order_of_discovery[i];
      phi[y] = g.mul(phi[parent[y]], images[via[y]]);
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Element x = 0; x < n; ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
      }
    }
    for (Element x : from) {
      if (!target[phi[x]]) return false;
    }
    return true;
  };
  auto assign = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) return try_images();
    for (Element y = 0; y < n; ++y) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (assign(assign, 0)) return phi;
  return std::nullopt;
}

}  // namespace distgraph
