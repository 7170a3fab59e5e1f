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

#include "distgraph/verify.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "distgraph/canon.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/generators.hpp"
#include "distgraph/graph6.hpp"
#include "distgraph/metrics.hpp"
#include "distgraph/patterns.hpp"

namespace distgraph {

std::optional<SrgParams> srg_parameters(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  std::optional<int> lambda;
  std::optional<int> mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
      std::optional<int>& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  if (!lambda || !mu) return std::nullopt;
  return SrgParams{n, k, *lambda, *mu};
}

bool is_sum_of_two_squares(int n) {
  if (n < 0) return false;
  for (int a = 0; a * a <= n; ++a) {
    const int rest = n - a * a;
    int b = 0;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return true;
  }
  return false;
}

SrgHitCheck check_strongly_regular_hit(const Graph& g, const SrgParams& params) {
  SrgHitCheck check;
  check.params = params;
  if (params.v % 4 == 1) {
    const int t = (params.v - 1) / 4;
    check.t = t;
    check.parameters_match =
        params.k == 2 * t && params.lambda == t - 1 && params.mu == t;
  }
  check.self_complementary = are_isomorphic(g, complement(g)).isomorphic;
  check.order_sum_of_two_squares = is_sum_of_two_squares(params.v);
  return check;
}

std::string_view family_name(ClassificationFamily family) {
  switch (family) {
    case ClassificationFamily::kC4Free:
      return "c4free";
    case ClassificationFamily::kDisjointTriangles:
      return "disjoint-triangles";
    case ClassificationFamily::kDiamondFree:
      return "diamond-free";
  }
  return "unknown";
}

std::optional<ClassificationFamily> parse_family(std::string_view name) {
  for (ClassificationFamily f :
       {ClassificationFamily::kC4Free, ClassificationFamily::kDisjointTriangles,
        ClassificationFamily::kDiamondFree}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

const char* status_name(VerificationStatus status) {
  return status == VerificationStatus::kConfirmed ? "confirmed" : "counterexample";
}

const char* report_kind_name(ReportKind kind) {
  return kind == ReportKind::kVerification ? "verification" : "evidence";
}

std::string canonical_graph6(const Graph& g) {
  return encode_graph6(canonical_form(g).graph());
}

namespace {

struct Scan {
  SearchCertificate certificate;
  std::vector<ClassCount> per_n;
  std::uint64_t identity_checked = 0;
  std::vector<std::string> identity_failures;
};

void check_ceiling(int max_n, const SearchFilter& filter,
                   const EnumerationOptions& options) {
  const int ceiling =
      filter.regular_degree ? options.bounded_degree_ceiling : options.ceiling;
  if (max_n > ceiling) {
    throw CeilingError("max_n = " + std::to_string(max_n) +
                       " exceeds the enumeration ceiling " +
                       std::to_string(ceiling));
  }
}

// Searches every order in [first, max_n] with the given stride and folds the
// per-order certificates into one.
Scan scan_orders(int first, int max_n, int stride, const SearchFilter& filter,
                 const EnumerationOptions& options) {
  check_ceiling(max_n, filter, options);
  const int jobs = std::max(1, options.jobs);
  Scan scan;
  SearchCertificate& agg = scan.certificate;
  agg.n = max_n;
  agg.filter = filter;
  agg.shard_count = jobs;
  agg.tool_version = tool_version();

  struct Audit {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
  };
  std::vector<Audit> audits(static_cast<std::size_t>(jobs));
  const ShardVisitor observer = [&](const Graph& g, int shard) {
    if (has_c4_subgraph(g)) return;
    Audit& a = audits[static_cast<std::size_t>(shard)];
    ++a.checked;
    if (!edge_identity_report(g).c4_free_form_holds()) {
      a.failures.push_back(canonical_graph6(g));
    }
  };

  for (int n = first; n <= max_n; n += stride) {
    SearchCertificate cert = search_self_two_distance(n, filter, options, &observer);
    scan.per_n.push_back({n, cert.classes_scanned});
    agg.classes_scanned += cert.classes_scanned;
    agg.wall_time += cert.wall_time;
    agg.hits.insert(agg.hits.end(), cert.hits.begin(), cert.hits.end());
    agg.degenerate_hits.insert(agg.degenerate_hits.end(),
                               cert.degenerate_hits.begin(),
                               cert.degenerate_hits.end());
  }
  for (Audit& a : audits) {
    scan.identity_checked += a.checked;
    scan.identity_failures.insert(scan.identity_failures.end(),
                                  a.failures.begin(), a.failures.end());
  }
  std::sort(scan.identity_failures.begin(), scan.identity_failures.end());
  return scan;
}

bool revalidates(const std::string& hit, const SearchFilter& filter) {
  try {
    const Graph g = decode_graph6(hit);
    return is_self_two_distance(g).holds && passes_filter(g, filter) &&
           canonical_graph6(g) == hit;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> sorted_canonical(const std::vector<Graph>& graphs) {
  std::vector<CanonicalForm> forms;
  forms.reserve(graphs.size());
  for (const Graph& g : graphs) forms.push_back(canonical_form(g));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<std::string> out;
  for (const CanonicalForm& f : forms) out.push_back(encode_graph6(f.graph()));
  return out;
}

VerificationReport report_from(std::string claim_id, ReportKind kind, int max_n,
                               const Scan& scan) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.kind = kind;
  r.max_n = max_n;
  r.actual_hits = scan.certificate.hits;
  r.certificate = scan.certificate;
  r.classes_per_n = scan.per_n;
  r.c4_free_identity_checked = scan.identity_checked;
  r.c4_free_identity_failures = scan.identity_failures;
  for (const std::string& hit : r.actual_hits) {
    if (!revalidates(hit, scan.certificate.filter)) r.counterexamples.push_back(hit);
    const Graph g = decode_graph6(hit);
    if (const auto params = srg_parameters(g)) {
      r.strongly_regular_hits.emplace_back(hit, check_strongly_regular_hit(g, *params));
    }
  }
  return r;
}

// Sorted-list difference preserving the canonical order of `a`.
std::vector<std::string> minus(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const std::string& x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  }
  return out;
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& xs) {
  for (const std::string& x : xs) {
    if (std::find(into.begin(), into.end(), x) == into.end()) into.push_back(x);
  }
}

void settle(VerificationReport& r) {
  r.missing_hits = minus(r.expected_hits, r.actual_hits);
  r.status = r.counterexamples.empty() && r.missing_hits.empty() &&
                     r.actual_hits == r.expected_hits
                 ? VerificationStatus::kConfirmed
                 : VerificationStatus::kCounterexample;
}

}  // namespace

VerificationReport verify_classification(ClassificationFamily family, int max_n,
                                         const EnumerationOptions& options) {
  SearchFilter filter;
  filter.connected_only = true;
  filter.min_n = 3;
  filter.require_c4_free = family == ClassificationFamily::kC4Free;
  filter.require_disjoint_triangles =
      family == ClassificationFamily::kDisjointTriangles;
  filter.require_diamond_free = family == ClassificationFamily::kDiamondFree;

  const Scan scan = scan_orders(3, max_n, 1, filter, options);
  VerificationReport r = report_from(std::string(family_name(family)),
                                     ReportKind::kVerification, max_n, scan);

  // Expected: every odd cycle from C5, the edged product C5|C3 and, without
  // diamonds, the two exceptional graphs on 8 and 9 vertices.
  std::vector<Graph> expected;
  for (int len = 5; len <= max_n; len += 2) {
    expected.push_back(basic_family(Family::kCycle, len));
  }
  const Graph c5 = basic_family(Family::kCycle, 5);
  const Graph c3 = basic_family(Family::kCycle, 3);
  const Graph c5c3 = edged_product(c5, first_edge(c5), c3, first_edge(c3));
  if (c5c3.order() <= max_n) expected.push_back(c5c3);
  if (family == ClassificationFamily::kDiamondFree) {
    for (NamedGraphId id : {NamedGraphId::kFig511, NamedGraphId::kFig512}) {
      Graph g = named_graph(id);
      if (g.order() <= max_n) expected.push_back(std::move(g));
    }
  }
  r.expected_hits = sorted_canonical(expected);
  append_unique(r.counterexamples, minus(r.actual_hits, r.expected_hits));
  settle(r);
  return r;
}

VerificationReport verify_no_cubic(int max_n, const EnumerationOptions& options) {
  SearchFilter filter;
  filter.connected_only = true;
  filter.min_n = 4;
  filter.regular_degree = 3;
  // Cubic graphs have even order.
  const Scan scan = scan_orders(4, max_n, 2, filter, options);
  VerificationReport r =
      report_from("no-cubic", ReportKind::kVerification, max_n, scan);
  append_unique(r.counterexamples, r.actual_hits);
  settle(r);
  return r;
}

std::pair<VerificationReport, VerificationReport> conjecture_scan(
    int max_n, const EnumerationOptions& options) {
  SearchFilter filter;
  filter.connected_only = true;
  filter.min_n = 3;
  const Scan scan = scan_orders(3, max_n, 1, filter, options);

  VerificationReport two_connected =
      report_from("two-connected", ReportKind::kEvidence, max_n, scan);
  VerificationReport odd_regular =
      report_from("odd-regular", ReportKind::kEvidence, max_n, scan);

  std::vector<std::string> not_two_connected;
  std::vector<std::string> odd_degree_regular;
  for (const std::string& hit : scan.certificate.hits) {
    const Graph g = decode_graph6(hit);
    if (!is_two_connected(g)) not_two_connected.push_back(hit);
    const int k = g.order() > 0 ? g.degree(0) : 0;
    bool regular = true;
    for (Vertex v = 0; v < g.order(); ++v) regular = regular && g.degree(v) == k;
    if (regular && k % 2 == 1) odd_degree_regular.push_back(hit);
  }
  // With no predicted list, the expected hits are the ones consistent with
  // the claim.
  two_connected.expected_hits = minus(scan.certificate.hits, not_two_connected);
  append_unique(two_connected.counterexamples, not_two_connected);
  odd_regular.expected_hits = minus(scan.certificate.hits, odd_degree_regular);
  append_unique(odd_regular.counterexamples, odd_degree_regular);
  settle(two_connected);
  settle(odd_regular);
  return {std::move(two_connected), std::move(odd_regular)};
}

}  // namespace distgraph
