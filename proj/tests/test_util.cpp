// Copyright 2026 The ScriptSync Authors
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

#include <atomic>
#include <stdexcept>
#include <vector>

#include "scriptsync/util/csv.hpp"
#include "scriptsync/util/error.hpp"
#include "scriptsync/util/parallel.hpp"
#include "scriptsync/util/random.hpp"

namespace scriptsync {
namespace {

TEST(Rng, SameSeedSameSequence) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, StreamsAreIndependentOfDrawOrder) {
  const Rng root(7);
  Rng s3 = root.stream(3);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 10; ++i) first.push_back(s3.next());
  // Drawing from other streams first changes nothing.
  Rng other = root.stream(1);
  other.next();
  Rng again = root.stream(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(again.next(), first[i]);
  EXPECT_NE(root.stream(3).next(), root.stream(4).next());
}

TEST(Rng, UniformRanges) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = rng.uniform_open0();
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LT(rng.below(7), 7u);
  }
}

TEST(Rng, BelowIsRoughlyUniform) {
  Rng rng(3);
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 100000; ++i) counts[rng.below(10)]++;
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (unsigned threads : {1u, 2u, 4u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(ParallelFor, RethrowsFirstFailure) {
  EXPECT_THROW(parallel_for(50, 3,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv::field("plain"), "plain");
  EXPECT_EQ(csv::field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, NumbersRoundTrip) {
  EXPECT_EQ(csv::number(0.5), "0.5");
  EXPECT_EQ(csv::number(2.0), "2");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(csv::number(x)), x);
}

TEST(ParseError, CarriesLine) {
  const ParseError e("bad timestamp", 12);
  EXPECT_EQ(e.line(), 12u);
  EXPECT_NE(std::string(e.what()).find("line 12"), std::string::npos);
}

}  // namespace
}  // namespace scriptsync
