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

#include <random>
#include <stdexcept>
#include <string>

#include "distgraph/enumerate.hpp"
#include "distgraph/generators.hpp"
#include "distgraph/graph6.hpp"
#include "oracles.hpp"

namespace distgraph {
namespace {

Graph6ErrorKind kind_of(const std::string& text) {
  try {
    decode_graph6(text);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return Graph6ErrorKind::kEmptyInput;
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(encode_graph6(basic_family(Family::kComplete, 2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(2)), "A?");
  EXPECT_EQ(encode_graph6(Graph()), "?");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(basic_family(Family::kCycle, 5)), "Dhc");
  EXPECT_EQ(encode_graph6(basic_family(Family::kComplete, 4)), "C~");
  EXPECT_EQ(decode_graph6("A_"), basic_family(Family::kComplete, 2));
  EXPECT_EQ(decode_graph6("A_\n"), basic_family(Family::kComplete, 2));
  EXPECT_EQ(decode_graph6("A_\r\n"), basic_family(Family::kComplete, 2));
}

TEST(Graph6, ErrorKinds) {
  EXPECT_EQ(kind_of(""), Graph6ErrorKind::kEmptyInput);
  EXPECT_EQ(kind_of("A"), Graph6ErrorKind::kInsufficientBitGroups);
  EXPECT_EQ(kind_of("A_?"), Graph6ErrorKind::kTrailingGarbage);
  EXPECT_EQ(kind_of("A\x01"), Graph6ErrorKind::kNonPrintable);
  EXPECT_EQ(kind_of("\x7f"), Graph6ErrorKind::kNonPrintable);
  EXPECT_EQ(kind_of("~"), Graph6ErrorKind::kMalformedHeader);
  EXPECT_EQ(kind_of("~??~"), Graph6ErrorKind::kMalformedHeader);
  // One edge bit and five padding bits; the last padding bit is set.
  EXPECT_EQ(kind_of("A`"), Graph6ErrorKind::kNonzeroPadding);
}

TEST(Graph6, RoundTripsEveryClassUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    enumerate_graphs(n, SearchFilter{}, [](const Graph& g) {
      const std::string s = encode_graph6(g);
      ASSERT_EQ(decode_graph6(s), g) << s;
    });
  }
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 31);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const std::string s = encode_graph6(g);
    // Length: one header byte plus ceil(n(n-1)/2 / 6) data bytes.
    ASSERT_EQ(s.size(), 1 + (static_cast<std::size_t>(n) * (n - (n > 0)) / 2 + 5) / 6);
    ASSERT_EQ(decode_graph6(s), g);
  }
}

TEST(Graph6, OrderLimit) {
  const Graph big = basic_family(Family::kCycle, kMaxGraph6Order);
  EXPECT_EQ(decode_graph6(encode_graph6(big)), big);
  EXPECT_THROW(encode_graph6(basic_family(Family::kCycle, 63)), std::invalid_argument);
}

}  // namespace
}  // namespace distgraph
