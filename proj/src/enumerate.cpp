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

#include "distgraph/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "distgraph/canon.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/graph6.hpp"
#include "distgraph/metrics.hpp"
#include "distgraph/patterns.hpp"

#ifndef DISTGRAPH_VERSION
#define DISTGRAPH_VERSION "distgraph"
#endif

namespace distgraph {

const char* tool_version() { return DISTGRAPH_VERSION; }

namespace {

// Subset-orbit bookkeeping needs 2^(n-1) flags.
constexpr int kMaxParentForFlags = 20;

bool hereditary_ok(const Graph& g, const SearchFilter& f) {
  if (f.require_c4_free && has_c4_subgraph(g)) return false;
  if (f.require_diamond_free && has_diamond(g)) return false;
  if (f.require_disjoint_triangles && !triangles_pairwise_disjoint(g)) {
    return false;
  }
  return true;
}

bool regular_ok(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

VertexMask image_of(VertexMask s, const Permutation& perm) {
  VertexMask out = 0;
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    out |= vertex_bit(perm[static_cast<std::size_t>(v)]);
  }
  return out;
}

struct LevelScratch {
  std::vector<std::uint8_t> seen;
  std::vector<VertexMask> touched;
  std::vector<VertexMask> queue;
};

// One slot per parent order; children() recurses through emit.
struct Scratch {
  std::array<LevelScratch, kMaxParentForFlags + 1> levels;
};

class Generator {
 public:
  Generator(int target, const SearchFilter& filter)
      : target_(target), filter_(filter) {}

  // Calls `emit` for each accepted child of `parent`.
  template <class Emit>
  void children(const Graph& parent, Scratch& all, Emit&& emit) const {
    const int m = parent.order();
    LevelScratch& scratch = all.levels[static_cast<std::size_t>(m)];
    const int child_order = m + 1;
    const bool last = child_order == target_;

    VertexMask allowed = parent.all_vertices();
    int max_size = m;
    if (filter_.regular_degree) {
      const int k = *filter_.regular_degree;
      for (Vertex v = 0; v < m; ++v) {
        if (parent.degree(v) >= k) allowed &= ~vertex_bit(v);
      }
      max_size = std::min(max_size, k);
    }

    std::vector<Permutation> gens;
    if (m > 1) {
      CanonicalLabeling lab = canonical_labeling(parent);
      gens = std::move(lab.generators);
    }
    const bool dedupe = !gens.empty();
    if (dedupe && scratch.seen.size() < (std::size_t{1} << m)) {
      scratch.seen.assign(std::size_t{1} << m, 0);
    }

    auto consider = [&](VertexMask s) {
      if (dedupe) {
        if (scratch.seen[s] != 0) return;
        // Mark the whole orbit of s under the parent's automorphisms.
        scratch.queue.assign(1, s);
        scratch.seen[s] = 1;
        scratch.touched.push_back(s);
        for (std::size_t head = 0; head < scratch.queue.size(); ++head) {
          const VertexMask cur = scratch.queue[head];
          for (const Permutation& p : gens) {
            const VertexMask img = image_of(cur, p);
            if (scratch.seen[img] == 0) {
              scratch.seen[img] = 1;
              scratch.touched.push_back(img);
              scratch.queue.push_back(img);
            }
          }
        }
      }
      const Graph child = parent.with_vertex(s);
      if (!prune_ok(child)) return;
      if (last && !final_ok(child)) return;
      if (!is_canonical_extension(child)) return;
      emit(child);
    };

    // Candidate subsets of `allowed` with at most max_size elements.
    const int bits = std::popcount(allowed);
    std::vector<Vertex> pool;
    for (VertexMask a = allowed; a != 0; a &= a - 1) {
      pool.push_back(std::countr_zero(a));
    }
    if (max_size >= bits) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        consider(scatter(code, pool));
      }
    } else {
      for (int size = 0; size <= max_size; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
          VertexMask s = 0;
          for (int i : idx) s |= vertex_bit(pool[static_cast<std::size_t>(i)]);
          consider(s);
          int i = size - 1;
          while (i >= 0 && idx[i] == bits - size + i) --i;
          if (i < 0) break;
          ++idx[i];
          for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
    }

    for (VertexMask s : scratch.touched) scratch.seen[s] = 0;
    scratch.touched.clear();
  }

  // Depth-first expansion below `node` down to the target order.
  template <class Visit>
  void expand(const Graph& node, Scratch& scratch, Visit&& visit) const {
    if (node.order() == target_) {
      visit(node);
      return;
    }
    children(node, scratch,
             [&](const Graph& child) { expand(child, scratch, visit); });
  }

  bool final_ok(const Graph& g) const {
    if (g.order() < filter_.min_n) return false;
    if (filter_.connected_only && !is_connected(g)) return false;
    if (filter_.regular_degree && !regular_ok(g, *filter_.regular_degree)) {
      return false;
    }
    return true;
  }

 private:
  static VertexMask scatter(std::uint64_t code, const std::vector<Vertex>& pool) {
    VertexMask s = 0;
    for (std::size_t i = 0; code != 0; ++i, code >>= 1) {
      if (code & 1U) s |= vertex_bit(pool[i]);
    }
    return s;
  }

  // Conditions inherited by every induced subgraph of an admissible result.
  bool prune_ok(const Graph& g) const {
    if (!hereditary_ok(g, filter_)) return false;
    if (filter_.regular_degree) {
      const int k = *filter_.regular_degree;
      int deficiency = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d > k) return false;
        deficiency += k - d;
      }
      if (deficiency > k * (target_ - g.order())) return false;
    }
    return true;
  }

  // Accepts iff the newest vertex is equivalent to the canonical deletion
  // vertex: maximum (degree, neighbor-degree sum), then largest canonical
  // label among the tied vertices.
  static bool is_canonical_extension(const Graph& g) {
    const int n = g.order();
    const Vertex last = n - 1;
    if (n <= 1) return true;
    std::array<std::uint32_t, kMaxVertices> key{};
    for (Vertex v = 0; v < n; ++v) {
      std::uint32_t sum = 0;
      for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        sum += static_cast<std::uint32_t>(g.degree(std::countr_zero(nb)));
      }
      key[v] = (static_cast<std::uint32_t>(g.degree(v)) << 16) | sum;
    }
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n; ++v) best = std::max(best, key[v]);
    if (key[last] != best) return false;
    int ties = 0;
    for (Vertex v = 0; v < n; ++v) ties += key[v] == best ? 1 : 0;
    if (ties == 1) return true;

    const CanonicalLabeling lab = canonical_labeling(g);
    Vertex chosen = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (key[v] != best) continue;
      if (chosen < 0 || lab.form.relabeling[v] > lab.form.relabeling[chosen]) {
        chosen = v;
      }
    }
    return lab.orbit[last] == lab.orbit[chosen];
  }

  int target_;
  SearchFilter filter_;
};

int resolve_ceiling(const SearchFilter& filter, const EnumerationOptions& options) {
  return filter.regular_degree ? options.bounded_degree_ceiling : options.ceiling;
}

}  // namespace

bool passes_filter(const Graph& g, const SearchFilter& filter) {
  if (g.order() < filter.min_n) return false;
  if (filter.connected_only && !is_connected(g)) return false;
  if (filter.regular_degree && !regular_ok(g, *filter.regular_degree)) {
    return false;
  }
  return hereditary_ok(g, filter);
}

std::uint64_t enumerate_graphs(int n, const SearchFilter& filter,
                               const ShardVisitor& visitor,
                               const EnumerationOptions& options) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  const int ceiling = resolve_ceiling(filter, options);
  if (n > ceiling) {
    throw CeilingError("n = " + std::to_string(n) +
                       " exceeds the enumeration ceiling " +
                       std::to_string(ceiling));
  }
  if (n - 1 > kMaxParentForFlags) {
    throw CeilingError("n = " + std::to_string(n) + " is too large to enumerate");
  }
  if (filter.regular_degree && *filter.regular_degree < 0) {
    throw std::invalid_argument("regular degree must be non-negative");
  }

  const Generator gen(n, filter);
  const Graph root;
  if (n == 0) {
    if (!gen.final_ok(root)) return 0;
    visitor(root, 0);
    return 1;
  }

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    Scratch scratch;
    std::uint64_t count = 0;
    gen.expand(root, scratch, [&](const Graph& g) {
      ++count;
      visitor(g, 0);
    });
    return count;
  }

  // Frontier at a split level, then shards pull nodes from it.
  const int split = std::max(0, n - 2);
  std::vector<Graph> frontier;
  {
    Scratch scratch;
    if (split == 0) {
      frontier.push_back(root);
    } else {
      // Intermediate levels use the target-order generator for pruning; only
      // the stopping depth differs.
      auto collect = [&](auto&& self, const Graph& node) -> void {
        if (node.order() == split) {
          frontier.push_back(node);
          return;
        }
        gen.children(node, scratch,
                     [&](const Graph& child) { self(self, child); });
      };
      collect(collect, root);
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](int shard) {
    try {
      Scratch scratch;
      std::uint64_t local = 0;
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        gen.expand(frontier[i], scratch, [&](const Graph& g) {
          ++local;
          visitor(g, shard);
        });
      }
      total += local;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = frontier.size();
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int shard = 0; shard < jobs; ++shard) threads.emplace_back(worker, shard);
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::uint64_t enumerate_graphs(int n, const SearchFilter& filter,
                               const std::function<void(const Graph&)>& visitor,
                               const EnumerationOptions& options) {
  std::mutex mutex;
  return enumerate_graphs(
      n, filter,
      [&](const Graph& g, int) {
        std::lock_guard<std::mutex> lock(mutex);
        visitor(g);
      },
      options);
}

SearchCertificate search_self_two_distance(int n, const SearchFilter& filter,
                                           const EnumerationOptions& options,
                                           const ShardVisitor* observer) {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, options.jobs);
  struct ShardHits {
    std::vector<CanonicalForm> hits;
    std::vector<CanonicalForm> degenerate;
  };
  std::vector<ShardHits> shards(static_cast<std::size_t>(jobs));

  SearchCertificate cert;
  cert.n = n;
  cert.filter = filter;
  cert.shard_count = jobs;
  cert.tool_version = tool_version();
  cert.classes_scanned = enumerate_graphs(
      n, filter,
      [&](const Graph& g, int shard) {
        if (observer != nullptr) (*observer)(g, shard);
        const Graph g2 = distance_graph(g, 2);
        if (g2.edge_count() != g.edge_count()) return;
        std::vector<int> da = g.degrees();
        std::vector<int> db = g2.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return;
        CanonicalForm form = canonical_form(g);
        if (!(form == canonical_form(g2))) return;
        ShardHits& out = shards[static_cast<std::size_t>(shard)];
        (g.edge_count() == 0 ? out.degenerate : out.hits).push_back(std::move(form));
      },
      options);

  auto merge = [&](auto member) {
    std::vector<CanonicalForm> all;
    for (ShardHits& s : shards) {
      auto& v = s.*member;
      all.insert(all.end(), std::make_move_iterator(v.begin()),
                 std::make_move_iterator(v.end()));
    }
    std::sort(all.begin(), all.end());
    std::vector<std::string> out;
    out.reserve(all.size());
    for (const CanonicalForm& f : all) out.push_back(encode_graph6(f.graph()));
    return out;
  };
  cert.hits = merge(&ShardHits::hits);
  cert.degenerate_hits = merge(&ShardHits::degenerate);
  cert.wall_time = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return cert;
}

}  // namespace distgraph
