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

// One-call exhaustive re-checks of classification results and open claims
// about self 2-distance graphs, plus strongly regular parameter extraction.

#ifndef DISTGRAPH_VERIFY_HPP_
#define DISTGRAPH_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distgraph/enumerate.hpp"
#include "distgraph/graph.hpp"

namespace distgraph {

struct SrgParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters when `g` is regular with constant codegree on adjacent pairs
/// and on non-adjacent pairs; both kinds of pair must occur.
std::optional<SrgParams> srg_parameters(const Graph& g);

bool is_sum_of_two_squares(int n);

/// Arithmetic and structural checks applied to a strongly regular hit.
struct SrgHitCheck {
  SrgParams params;
  /// Set when v = 4t+1.
  std::optional<int> t;
  /// (v, k, lambda, mu) == (4t+1, 2t, t-1, t).
  bool parameters_match = false;
  bool self_complementary = false;
  bool order_sum_of_two_squares = false;

  bool consistent() const {
    return parameters_match && self_complementary && order_sum_of_two_squares;
  }
};

SrgHitCheck check_strongly_regular_hit(const Graph& g, const SrgParams& params);

enum class ClassificationFamily { kC4Free, kDisjointTriangles, kDiamondFree };

/// "c4free", "disjoint-triangles", "diamond-free".
std::string_view family_name(ClassificationFamily family);
std::optional<ClassificationFamily> parse_family(std::string_view name);

enum class VerificationStatus { kConfirmed, kCounterexample };
/// Proven results are re-verified; open conjectures only gather evidence.
enum class ReportKind { kVerification, kEvidence };

const char* status_name(VerificationStatus status);
const char* report_kind_name(ReportKind kind);

struct ClassCount {
  int n = 0;
  std::uint64_t classes = 0;
  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

struct VerificationReport {
  std::string claim_id;
  ReportKind kind = ReportKind::kVerification;
  int max_n = 0;
  VerificationStatus status = VerificationStatus::kCounterexample;
  /// All graph6 lists hold canonically labeled graphs ordered by
  /// (order, canonical bit string).
  std::vector<std::string> expected_hits;
  std::vector<std::string> actual_hits;
  /// Hits contradicting the claim, plus hits that failed re-validation.
  std::vector<std::string> counterexamples;
  /// Expected hits the scan did not produce.
  std::vector<std::string> missing_hits;
  /// Aggregate over every scanned order: n is max_n, counts are summed and
  /// hit lists concatenated in order.
  SearchCertificate certificate;
  std::vector<ClassCount> classes_per_n;
  /// C4-free scanned classes on which |E(L)| = |E(G2)| + 3T was evaluated,
  /// and those on which it failed.
  std::uint64_t c4_free_identity_checked = 0;
  std::vector<std::string> c4_free_identity_failures;
  /// Strongly regular hits and their checks.
  std::vector<std::pair<std::string, SrgHitCheck>> strongly_regular_hits;
};

/// Scans connected classes with 3 <= n <= max_n under the family filter and
/// compares the hits with the expected list: odd cycles from C5, C5|C3, and
/// for diamond-free also fig511 and fig512. Throws CeilingError above the
/// enumeration ceiling.
VerificationReport verify_classification(ClassificationFamily family, int max_n,
                                         const EnumerationOptions& options = {});

/// Scans connected cubic classes with 4 <= n <= max_n; confirmed iff no hit.
VerificationReport verify_no_cubic(int max_n,
                                   const EnumerationOptions& options = {});

/// One scan of connected classes with 3 <= n <= max_n, reported twice: every
/// hit is 2-connected, and no hit is regular of odd degree. Both reports are
/// evidence.
std::pair<VerificationReport, VerificationReport> conjecture_scan(
    int max_n, const EnumerationOptions& options = {});

/// graph6 of the canonically labeled form of `g`.
std::string canonical_graph6(const Graph& g);

}  // namespace distgraph

#endif  // DISTGRAPH_VERIFY_HPP_
