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

#include "distgraph/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "distgraph/kernels.hpp"

namespace distgraph {

namespace {

using Slots = std::array<std::uint8_t, kMaxVertices>;
using Columns = std::array<VertexMask, kMaxVertices>;

// Ordered partition of the vertex set into cells. Cells are contiguous runs
// of `lab`; a cell is identified by its start position.
struct Partition {
  int n = 0;
  int cells = 0;
  Slots lab{};       // position -> vertex
  Slots cell_end{};  // cell start -> one past its last position
  Slots cell_of{};   // vertex -> start of its cell

  bool discrete() const { return cells == n; }
};

// -1, 0, +1 comparing the upper-triangle bit strings of two leaves.
int compare_columns(const Columns& a, const Columns& b, int n) {
  for (int j = 1; j < n; ++j) {
    const VertexMask diff = a[j] ^ b[j];
    if (diff != 0) {
      return ((a[j] >> std::countr_zero(diff)) & 1U) != 0 ? 1 : -1;
    }
  }
  return 0;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    out.form.n = n_;
    if (n_ == 0) return out;

    seed_twin_transpositions();

    Partition root;
    root.n = n_;
    root.cells = 1;
    for (int i = 0; i < n_; ++i) {
      root.lab[i] = static_cast<std::uint8_t>(i);
      root.cell_of[i] = 0;
    }
    root.cell_end[0] = static_cast<std::uint8_t>(n_);
    refine(root, 0);
    search(root, 0);

    out.form.columns.assign(best_cert_.begin(), best_cert_.begin() + n_);
    out.form.relabeling.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out.form.relabeling[best_lab_[i]] = i;

    out.generators.reserve(gens_.size());
    for (const Slots& gen : gens_) {
      out.generators.emplace_back(gen.begin(), gen.begin() + n_);
    }
    Slots root_of{};
    std::iota(root_of.begin(), root_of.begin() + n_, 0);
    for (const Slots& gen : gens_) unite_all(root_of, gen);
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.orbit[v] = find(root_of, v);
    return out;
  }

 private:
  static int find(Slots& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Union-find whose representative is always the smallest member.
  void unite_all(Slots& parent, const Slots& gen) const {
    for (int v = 0; v < n_; ++v) {
      const int a = find(parent, v);
      const int b = find(parent, gen[v]);
      if (a < b) {
        parent[b] = static_cast<std::uint8_t>(a);
      } else if (b < a) {
        parent[a] = static_cast<std::uint8_t>(b);
      }
    }
  }

  // Twin vertices (equal neighborhoods apart from each other) can be swapped
  // by a transposition that fixes everything else.
  void seed_twin_transpositions() {
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        const VertexMask nu = g_.neighbors(u) & ~vertex_bit(v);
        const VertexMask nv = g_.neighbors(v) & ~vertex_bit(u);
        if (nu == nv) {
          Slots gen{};
          std::iota(gen.begin(), gen.begin() + n_, 0);
          gen[u] = static_cast<std::uint8_t>(v);
          gen[v] = static_cast<std::uint8_t>(u);
          gens_.push_back(gen);
          break;
        }
      }
    }
  }

  // Refines `p` to the coarsest equitable partition finer than it, starting
  // with the cell at `first_splitter` as the only splitter.
  void refine(Partition& p, int first_splitter) const {
    std::array<std::uint8_t, kMaxVertices> queue{};
    std::array<bool, kMaxVertices> queued{};
    int head = 0;
    int size = 0;
    auto push = [&](int start) {
      if (queued[start]) return;
      queued[start] = true;
      queue[(head + size) % kMaxVertices] = static_cast<std::uint8_t>(start);
      ++size;
    };
    push(first_splitter);

    std::array<std::uint8_t, kMaxVertices> count{};
    std::array<std::uint16_t, kMaxVertices> key{};
    while (size > 0 && !p.discrete()) {
      const int w = queue[head];
      head = (head + 1) % kMaxVertices;
      --size;
      queued[w] = false;

      VertexMask splitter = 0;
      for (int i = w; i < p.cell_end[w]; ++i) splitter |= vertex_bit(p.lab[i]);
      kernels::masked_popcount(g_.rows(), splitter,
                               std::span(count.data(), count.size()));

      for (int s = 0; s < n_;) {
        const int e = p.cell_end[s];
        if (e - s == 1) {
          s = e;
          continue;
        }
        bool uniform = true;
        const std::uint8_t c0 = count[p.lab[s]];
        for (int i = s + 1; i < e; ++i) {
          if (count[p.lab[i]] != c0) {
            uniform = false;
            break;
          }
        }
        if (uniform) {
          s = e;
          continue;
        }
        for (int i = s; i < e; ++i) {
          key[p.lab[i]] =
              static_cast<std::uint16_t>((count[p.lab[i]] << 8) | p.lab[i]);
        }
        std::sort(p.lab.begin() + s, p.lab.begin() + e,
                  [&](std::uint8_t a, std::uint8_t b) { return key[a] < key[b]; });
        int frag = s;
        for (int i = s + 1; i <= e; ++i) {
          if (i == e || count[p.lab[i]] != count[p.lab[frag]]) {
            p.cell_end[frag] = static_cast<std::uint8_t>(i);
            for (int k = frag; k < i; ++k) {
              p.cell_of[p.lab[k]] = static_cast<std::uint8_t>(frag);
            }
            if (frag != s) ++p.cells;
            push(frag);
            frag = i;
          }
        }
        s = e;
      }
    }
  }

  // Moves `v` to the front of its cell and splits it off as a singleton.
  static void individualize(Partition& p, int v) {
    const int s = p.cell_of[v];
    const int e = p.cell_end[s];
    int at = s;
    while (p.lab[at] != v) ++at;
    std::rotate(p.lab.begin() + s, p.lab.begin() + at, p.lab.begin() + at + 1);
    p.cell_end[s] = static_cast<std::uint8_t>(s + 1);
    p.cell_end[s + 1] = static_cast<std::uint8_t>(e);
    for (int i = s + 1; i < e; ++i) {
      p.cell_of[p.lab[i]] = static_cast<std::uint8_t>(s + 1);
    }
    ++p.cells;
  }

  // First smallest non-singleton cell, by position.
  static int target_cell(const Partition& p) {
    int best = -1;
    int best_size = kMaxVertices + 1;
    for (int s = 0; s < p.n; s = p.cell_end[s]) {
      const int size = p.cell_end[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
        if (size == 2) break;
      }
    }
    return best;
  }

  void certificate(const Partition& p, Columns& cert) const {
    Slots pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    for (int j = 0; j < n_; ++j) {
      VertexMask col = 0;
      for (VertexMask rest = g_.neighbors(p.lab[j]); rest != 0;
           rest &= rest - 1) {
        const int i = pos[std::countr_zero(rest)];
        if (i < j) col |= vertex_bit(i);
      }
      cert[j] = col;
    }
  }

  static int common_prefix(const std::vector<int>& a,
                           const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) &&
           a[k] == b[k]) {
      ++k;
    }
    return k;
  }

  void record_automorphism(const Slots& from, const Slots& to) {
    Slots gen{};
    for (int i = 0; i < n_; ++i) gen[from[i]] = to[i];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && gen[v] == v;
    if (!identity) gens_.push_back(gen);
  }

  void leaf(const Partition& p) {
    Columns cert{};
    certificate(p, cert);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path_;
      return;
    }
    if (compare_columns(cert, first_cert_, n_) == 0) {
      record_automorphism(first_lab_, p.lab);
      abort_to_ = common_prefix(path_, first_path_);
      return;
    }
    const int cmp = compare_columns(cert, best_cert_, n_);
    if (cmp < 0) {
      best_cert_ = cert;
      best_lab_ = p.lab;
      best_path_ = path_;
    } else if (cmp == 0) {
      record_automorphism(best_lab_, p.lab);
      abort_to_ = common_prefix(path_, best_path_);
    }
  }

  // True when `v` shares an orbit with an already tried sibling under the
  // automorphisms found so far that fix the current path pointwise.
  bool equivalent_to_tried(int v, const std::vector<int>& tried) const {
    if (tried.empty() || gens_.empty()) return false;
    Slots parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    bool any = false;
    for (const Slots& gen : gens_) {
      bool fixes_path = true;
      for (int u : path_) {
        if (gen[u] != u) {
          fixes_path = false;
          break;
        }
      }
      if (!fixes_path) continue;
      unite_all(parent, gen);
      any = true;
    }
    if (!any) return false;
    const int rv = find(parent, v);
    for (int t : tried) {
      if (find(parent, t) == rv) return true;
    }
    return false;
  }

  void search(const Partition& p, int depth) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    const int s = target_cell(p);
    std::array<std::uint8_t, kMaxVertices> members{};
    const int e = p.cell_end[s];
    std::copy(p.lab.begin() + s, p.lab.begin() + e, members.begin());
    std::sort(members.begin(), members.begin() + (e - s));

    std::vector<int> tried;
    for (int k = 0; k < e - s; ++k) {
      const int v = members[k];
      if (equivalent_to_tried(v, tried)) continue;
      tried.push_back(v);
      Partition child = p;
      individualize(child, v);
      refine(child, s);
      path_.push_back(v);
      search(child, depth + 1);
      path_.pop_back();
      if (abort_to_ >= 0) {
        if (depth > abort_to_) return;
        abort_to_ = -1;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Slots> gens_;
  std::vector<int> path_;
  bool have_leaf_ = false;
  Columns first_cert_{};
  Columns best_cert_{};
  Slots first_lab_{};
  Slots best_lab_{};
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  int abort_to_ = -1;
};

}  // namespace

std::string CanonicalForm::bit_string() const {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back((columns[j] >> i) & 1U ? '1' : '0');
  }
  return bits;
}

Graph CanonicalForm::graph() const {
  std::array<VertexMask, kMaxVertices> rows{};
  for (int j = 0; j < n; ++j) {
    for (VertexMask rest = columns[j]; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      rows[i] |= vertex_bit(j);
      rows[j] |= vertex_bit(i);
    }
  }
  return Graph::from_rows(n, std::span(rows.data(), static_cast<std::size_t>(n)));
}

std::strong_ordering operator<=>(const CanonicalForm& a,
                                 const CanonicalForm& b) {
  if (a.n != b.n) return a.n <=> b.n;
  for (int j = 1; j < a.n; ++j) {
    const VertexMask diff = a.columns[j] ^ b.columns[j];
    if (diff != 0) {
      return ((a.columns[j] >> std::countr_zero(diff)) & 1U) != 0
                 ? std::strong_ordering::greater
                 : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  return canonical_labeling(g).form;
}

IsomorphismResult are_isomorphic(const Graph& g, const Graph& h) {
  IsomorphismResult result;
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return result;
  }
  const CanonicalForm fg = canonical_form(g);
  const CanonicalForm fh = canonical_form(h);
  if (fg != fh) return result;

  Permutation inverse_h(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) inverse_h[fh.relabeling[v]] = v;
  Permutation witness(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    witness[v] = inverse_h[fg.relabeling[v]];
  }
  if (!is_embedding(g, h, witness, /*induced=*/true)) {
    throw std::logic_error("canonical forms agree but the witness is not an isomorphism");
  }
  result.isomorphic = true;
  result.witness = std::move(witness);
  return result;
}

std::optional<std::vector<Vertex>> find_subgraph(const Graph& pattern,
                                                 const Graph& host,
                                                 bool induced) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<Vertex>{};

  // Match order: start from a maximum-degree vertex, then repeatedly take the
  // vertex with the most already-ordered neighbors.
  std::vector<Vertex> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < k) {
    Vertex pick = -1;
    int best_links = -1;
    int best_degree = -1;
    for (Vertex p = 0; p < k; ++p) {
      if ((placed & vertex_bit(p)) != 0) continue;
      const int links = std::popcount(pattern.neighbors(p) & placed);
      const int deg = pattern.degree(p);
      if (links > best_links || (links == best_links && deg > best_degree)) {
        pick = p;
        best_links = links;
        best_degree = deg;
      }
    }
    order.push_back(pick);
    placed |= vertex_bit(pick);
  }

  std::vector<VertexMask> host_degree_ok(static_cast<std::size_t>(k), 0);
  for (Vertex p = 0; p < k; ++p) {
    for (Vertex h = 0; h < n; ++h) {
      if (host.degree(h) >= pattern.degree(p)) host_degree_ok[p] |= vertex_bit(h);
    }
  }

  std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
  VertexMask used = 0;
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    const Vertex p = order[depth];
    VertexMask cand = host_degree_ok[p] & ~used;
    for (int d = 0; d < depth && cand != 0; ++d) {
      const Vertex q = order[d];
      if (pattern.adjacent(p, q)) {
        cand &= host.neighbors(map[q]);
      } else if (induced) {
        cand &= ~host.neighbors(map[q]);
      }
    }
    for (; cand != 0; cand &= cand - 1) {
      const Vertex h = std::countr_zero(cand);
      map[p] = h;
      used |= vertex_bit(h);
      if (self(self, depth + 1)) return true;
      used &= ~vertex_bit(h);
    }
    map[p] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

}  // namespace distgraph
