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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" DISTGRAPH_CLI_PATH "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json strip(Json j) {
  if (j.is_object()) {
    j.erase("wall_time");
    j.erase("shard_count");
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip(*it);
  } else if (j.is_array()) {
    for (auto& x : j) x = strip(x);
  }
  return j;
}

TEST(Cli, GenAndAnalyze) {
  const CliResult gen = run("gen c5c3");
  ASSERT_EQ(gen.status, 0);
  const CliResult a = run("gen c5c3 | \"" DISTGRAPH_CLI_PATH "\" analyze - --json");
  ASSERT_EQ(a.status, 0);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["self_two_distance"]["holds"], true);
  EXPECT_EQ(j["n"], 6);
  const CliResult text = run("analyze DLo");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("self_two_distance: true"), std::string::npos);
}

TEST(Cli, MultiLineStdin) {
  const CliResult a = run("analyze - --json", "printf 'DLo\\nA_\\n\\nC~\\n' |");
  ASSERT_EQ(a.status, 0);
  std::istringstream lines(a.out);
  std::string line;
  std::vector<Json> docs;
  while (std::getline(lines, line)) docs.push_back(Json::parse(line));
  ASSERT_EQ(docs.size(), 3U);
  EXPECT_EQ(docs[0]["self_two_distance"]["holds"], true);
  EXPECT_EQ(docs[1]["n"], 2);
  EXPECT_EQ(docs[2]["self_two_distance"]["holds"], false);
}

TEST(Cli, Generators) {
  EXPECT_EQ(run("gen cycle:5").out, "Dhc\n");
  EXPECT_EQ(run("gen complete:2").out, "A_\n");
  EXPECT_EQ(run("gen paley:5").status, 0);
  EXPECT_EQ(run("gen prop23:@").status, 0);
  EXPECT_EQ(run("gen fig512").status, 0);
  EXPECT_EQ(run("gen nonsense").status, 2);
  EXPECT_EQ(run("gen cycle:x").status, 2);
  EXPECT_EQ(run("gen paley:9").status, 2);
}

TEST(Cli, Search) {
  const CliResult r = run("search --n 5 --connected");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "distgraph.search_certificate/1");
  EXPECT_EQ(j["hits"], Json::array({"DLo"}));
  EXPECT_EQ(run("search --n 11").status, 2);
  EXPECT_EQ(run("search --n 6 --filter bogus").status, 2);
}

TEST(Cli, JobsDoNotChangeTheCertificate) {
  const CliResult one = run("search --n 7 --connected --jobs 1");
  const CliResult three = run("search --n 7 --connected --jobs 3");
  ASSERT_EQ(one.status, 0);
  ASSERT_EQ(three.status, 0);
  EXPECT_EQ(strip(Json::parse(one.out)), strip(Json::parse(three.out)));
  EXPECT_EQ(Json::parse(three.out)["shard_count"], 3);
}

TEST(Cli, JobsFromEnvironment) {
  const CliResult r = run("search --n 6", "DG_JOBS=2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["shard_count"], 2);
  EXPECT_EQ(run("search --n 6", "DG_JOBS=zero").status, 2);
}

TEST(Cli, Verify) {
  const auto path = std::filesystem::temp_directory_path() / "distgraph_cli_test_report.json";
  std::filesystem::remove(path);
  const CliResult r = run("verify c4free --max-n 7 --out \"" + path.string() + "\"");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "confirmed");
  std::ifstream file(path);
  ASSERT_TRUE(file.good());
  EXPECT_EQ(Json::parse(file), j);
  std::filesystem::remove(path);

  const CliResult c = run("verify conjectures --max-n 7");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(Json::parse(c.out)["kind"], "evidence");
  EXPECT_EQ(run("verify no-cubic --max-n 8").status, 0);
}

TEST(Cli, Cayley) {
  const CliResult r = run("cayley --group cyclic:5 --set 1,4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["connection_set_used"], Json::array({2, 3}));
  EXPECT_EQ(run("cayley --group cyclic:6 --set 1").status, 2);
  EXPECT_EQ(run("cayley --group klein:4 --set 1").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("search --n 5 --bogus").status, 2);
  EXPECT_EQ(run("verify unknown-claim --max-n 5").status, 2);
  EXPECT_EQ(run("analyze 'A'").status, 2);
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("--version").status, 0);
}

}  // namespace
