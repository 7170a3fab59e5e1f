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

// Command-line front end. graph6 in, graph6 or JSON out.
//
// Exit status: 0 success, 1 counterexample found by verify, 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "distgraph/cayley.hpp"
#include "distgraph/distance.hpp"
#include "distgraph/enumerate.hpp"
#include "distgraph/generators.hpp"
#include "distgraph/graph6.hpp"
#include "distgraph/metrics.hpp"
#include "distgraph/report_json.hpp"
#include "distgraph/verify.hpp"

namespace {

using distgraph::Graph;
using distgraph::Json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  const char* env = std::getenv("DG_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int jobs = std::stoi(env);
    if (jobs >= 1) return jobs;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("DG_JOBS must be a positive integer, got '") + env + "'");
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(what + " must be an integer, got '" + text + "'");
  }
  return value;
}

// "name:arg" -> ("name", "arg"); no colon gives an empty argument.
std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

Graph generate(const std::string& spec) {
  const auto [name, arg] = split_spec(spec);
  if (name == "cycle") return distgraph::basic_family(distgraph::Family::kCycle, parse_int(arg, "n"));
  if (name == "path") return distgraph::basic_family(distgraph::Family::kPath, parse_int(arg, "n"));
  if (name == "complete") {
    return distgraph::basic_family(distgraph::Family::kComplete, parse_int(arg, "n"));
  }
  if (name == "paley") return distgraph::paley(parse_int(arg, "q"));
  if (name == "prop23") return distgraph::prop23_construction(distgraph::decode_graph6(arg));
  if (arg.empty()) {
    if (const auto id = distgraph::parse_named_graph(name)) return distgraph::named_graph(*id);
  }
  throw UsageError("unknown generator '" + spec + "'");
}

void print_text_analysis(const Json& a, std::ostream& out) {
  out << "graph6: " << a["graph6"].get<std::string>() << "\n";
  out << "n: " << a["n"] << "  edges: " << a["edges"] << "\n";
  const Json& m = a["metrics"];
  out << "diameter: " << m["diameter"] << "  girth: " << m["girth"]
      << "  triangles: " << m["triangle_count"] << "  max_degree: " << m["max_degree"]
      << "\n";
  out << "components: " << m["component_count"]
      << "  two_connected: " << m["two_connected"] << "\n";
  const Json& p = a["patterns"];
  out << "c4_subgraph: " << p["has_c4_subgraph"] << "  diamond: " << p["has_diamond"]
      << "  disjoint_triangles: " << p["triangles_pairwise_disjoint"]
      << "  induced_claw: " << p["has_induced_claw"]
      << "  c5c3_subgraph: " << p["has_c5c3_subgraph"] << "\n";
  const Json& s = a["self_two_distance"];
  out << "self_two_distance: " << s["holds"];
  if (s["degenerate"].get<bool>()) out << " (degenerate: edgeless)";
  out << "\n";
  out << "gamma2: " << s["gamma2"].get<std::string>() << "\n";
  out << "srg_parameters: " << a["srg_parameters"].dump() << "\n";
}

int run_analyze(const std::string& input, bool json) {
  std::vector<std::string> lines;
  if (input == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  } else {
    lines.push_back(input);
  }
  for (const std::string& line : lines) {
    const Json a = distgraph::analysis_json(distgraph::decode_graph6(line));
    if (json) {
      std::cout << a.dump() << "\n";
    } else {
      print_text_analysis(a, std::cout);
    }
  }
  return kExitOk;
}

void emit(const Json& doc, const std::string& out_path) {
  std::cout << doc.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
    file << doc.dump(2) << "\n";
  }
}

distgraph::GroupTable parse_group(const std::string& spec) {
  const auto [name, arg] = split_spec(spec);
  const int m = parse_int(arg, "group parameter");
  if (name == "cyclic") return distgraph::group_table(distgraph::GroupKind::kCyclic, m);
  if (name == "dihedral") return distgraph::group_table(distgraph::GroupKind::kDihedral, m);
  throw UsageError("unknown group '" + spec + "'");
}

std::vector<distgraph::Element> parse_set(const std::string& text) {
  std::vector<distgraph::Element> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_int(item, "set element"));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self 2-distance graph toolkit"};
  app.set_version_flag("--version", distgraph::tool_version());
  app.require_subcommand(1);

  std::string analyze_input;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Metrics, patterns and self 2-distance test");
  analyze->add_option("graph", analyze_input, "graph6 string, or - for stdin")->required();
  analyze->add_flag("--json", analyze_json, "One JSON document per input graph");

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "Emit a constructed graph as graph6");
  gen->add_option("spec", gen_spec,
                  "cycle:n|complete:n|path:n|c5c3|diamond|fig511|fig512|petersen|"
                  "prop23:<graph6>|paley:q")
      ->required();

  int search_n = 0;
  bool search_connected = false;
  int search_min_n = 0;
  std::optional<int> search_regular;
  std::vector<std::string> search_filters;
  std::optional<int> search_jobs;
  std::string search_out;
  auto* search = app.add_subcommand("search", "Exhaustive self 2-distance search");
  search->add_option("--n", search_n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  search->add_flag("--connected", search_connected, "Connected graphs only");
  search->add_option("--min-n", search_min_n, "Minimum order")->check(CLI::NonNegativeNumber);
  search->add_option("--regular", search_regular, "Regular degree")->check(CLI::NonNegativeNumber);
  search->add_option("--filter", search_filters, "c4-free|diamond-free|disjoint-triangles")
      ->check(CLI::IsMember({"c4-free", "diamond-free", "disjoint-triangles"}));
  search->add_option("--jobs", search_jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", search_out, "Also write the certificate here");

  std::string verify_claim;
  int verify_max_n = 0;
  std::optional<int> verify_jobs;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Re-verify a classification or scan a conjecture");
  verify->add_option("claim", verify_claim, "c4free|disjoint-triangles|diamond-free|no-cubic|conjectures")
      ->required()
      ->check(CLI::IsMember({"c4free", "disjoint-triangles", "diamond-free", "no-cubic", "conjectures"}));
  verify->add_option("--max-n", verify_max_n, "Largest order scanned")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out, "Also write the report here");

  std::string cayley_group;
  std::string cayley_set;
  auto* cayley = app.add_subcommand("cayley", "Check the 2-distance Cayley identity");
  cayley->add_option("--group", cayley_group, "cyclic:m|dihedral:m")->required();
  cayley->add_option("--set", cayley_set, "Comma-separated connection set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_input, analyze_json);

    if (*gen) {
      std::cout << distgraph::encode_graph6(generate(gen_spec)) << "\n";
      return kExitOk;
    }

    if (*search) {
      distgraph::SearchFilter filter;
      filter.connected_only = search_connected;
      filter.min_n = search_min_n;
      filter.regular_degree = search_regular;
      for (const std::string& f : search_filters) {
        if (f == "c4-free") filter.require_c4_free = true;
        if (f == "diamond-free") filter.require_diamond_free = true;
        if (f == "disjoint-triangles") filter.require_disjoint_triangles = true;
      }
      distgraph::EnumerationOptions options;
      options.jobs = search_jobs.value_or(default_jobs());
      emit(distgraph::certificate_json(
               distgraph::search_self_two_distance(search_n, filter, options)),
           search_out);
      return kExitOk;
    }

    if (*verify) {
      distgraph::EnumerationOptions options;
      options.jobs = verify_jobs.value_or(default_jobs());
      bool confirmed = true;
      Json doc;
      if (verify_claim == "conjectures") {
        const auto reports = distgraph::conjecture_scan(verify_max_n, options);
        confirmed = reports.first.status == distgraph::VerificationStatus::kConfirmed &&
                    reports.second.status == distgraph::VerificationStatus::kConfirmed;
        doc = distgraph::conjecture_json(reports);
      } else {
        const distgraph::VerificationReport report =
            verify_claim == "no-cubic"
                ? distgraph::verify_no_cubic(verify_max_n, options)
                : distgraph::verify_classification(*distgraph::parse_family(verify_claim),
                                                   verify_max_n, options);
        confirmed = report.status == distgraph::VerificationStatus::kConfirmed;
        doc = distgraph::verification_json(report);
      }
      emit(doc, verify_out);
      return confirmed ? kExitOk : kExitCounterexample;
    }

    if (*cayley) {
      const distgraph::GroupTable group = parse_group(cayley_group);
      const distgraph::ConnectionSet set(group, parse_set(cayley_set));
      const auto report = distgraph::distance_identity_check(group, set);
      std::cout << distgraph::cayley_json(report, group, set).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
