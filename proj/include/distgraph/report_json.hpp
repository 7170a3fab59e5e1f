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

// JSON forms of every report. Top-level documents carry a "schema" field of
// the form "distgraph.<name>/<version>".

#ifndef DISTGRAPH_REPORT_JSON_HPP_
#define DISTGRAPH_REPORT_JSON_HPP_

#include "json.hpp"

#include "distgraph/cayley.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/enumerate.hpp"
#include "distgraph/metrics.hpp"
#include "distgraph/patterns.hpp"
#include "distgraph/verify.hpp"

namespace distgraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAnalysisSchema = "distgraph.analysis/1";
inline constexpr const char* kCertificateSchema = "distgraph.search_certificate/1";
inline constexpr const char* kVerificationSchema = "distgraph.verification_report/1";
inline constexpr const char* kConjectureSchema = "distgraph.conjecture_evidence/1";
inline constexpr const char* kCayleySchema = "distgraph.cayley_identity/1";

/// Finite values as numbers, infinity as the string "infinity".
Json to_json(const ExtendedNat& x);
Json to_json(const MetricsReport& r);
Json to_json(const PatternReport& r);
Json to_json(const EdgeIdentityReport& r);
Json to_json(const SrgParams& p);
Json to_json(const SrgHitCheck& c);
Json to_json(const SearchFilter& f);

/// Top-level documents.
Json certificate_json(const SearchCertificate& c);
Json verification_json(const VerificationReport& r);
Json conjecture_json(const std::pair<VerificationReport, VerificationReport>& r);
Json cayley_json(const DistanceIdentityReport& r, const GroupTable& g,
                 const ConnectionSet& s);

/// Everything the analyze command reports for one graph.
Json analysis_json(const Graph& g);

/// Inverse of certificate_json. Throws std::invalid_argument on a schema
/// mismatch and nlohmann::json exceptions on missing fields.
SearchCertificate certificate_from_json(const Json& j);
SearchFilter filter_from_json(const Json& j);

/// Copy with every "wall_time" and "shard_count" member removed, at any depth.
Json without_timing(Json j);

}  // namespace distgraph

#endif  // DISTGRAPH_REPORT_JSON_HPP_
