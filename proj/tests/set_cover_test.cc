// Copyright 2026 The secdom Authors
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

#include "secdom/set_cover.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "secdom/graph_io.h"
#include "support/test_graphs.h"

namespace secdom {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(SECDOM_FIXTURES_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

TEST(SetCoverTest, ParsesNineElementFixture) {
  const SetCoverInstance inst = ParseSetCover(ReadFixture("set_cover_9x5.sc"));
  EXPECT_EQ(inst.universe_size, 9);
  ASSERT_EQ(inst.num_subsets(), 5);
  EXPECT_THAT(inst.subsets[0], ElementsAre(0, 1, 3));
  EXPECT_THAT(inst.subsets[3], ElementsAre(3, 4, 5, 8));
  EXPECT_TRUE(inst.IsValid());
}

TEST(SetCoverTest, SerializationIsByteExact) {
  const std::string text = ReadFixture("set_cover_9x5.sc");
  EXPECT_EQ(SerializeSetCover(ParseSetCover(text)), text);
}

TEST(SetCoverTest, RoundTripsRandomInstances) {
  std::mt19937_64 rng(testing::kSeedSetCover);
  for (int trial = 0; trial < 50; ++trial) {
    const SetCoverInstance inst = testing::RandomSetCover(
        1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 6), rng);
    EXPECT_EQ(ParseSetCover(SerializeSetCover(inst)), inst);
  }
}

TEST(SetCoverTest, ReportsMalformedInput) {
  try {
    ParseSetCover("3 2\n1 2\n1 x\n");
    FAIL() << "accepted a non-numeric element";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(ParseSetCover("3 2\n1 2\n"), ParseError);
  EXPECT_THROW(ParseSetCover("3 1\n1 4\n"), ParseError);
  EXPECT_THROW(ParseSetCover("3 1\n0 1\n"), ParseError);
  EXPECT_THROW(ParseSetCover(""), ParseError);
  EXPECT_THROW(ParseSetCover("3 1\n1 2 3\n1\n"), ParseError);
}

TEST(SetCoverTest, ProblemsListUncoveredElements) {
  SetCoverInstance inst{3, {{0}, {1}}};
  EXPECT_FALSE(inst.IsValid());
  EXPECT_EQ(inst.Problems().size(), 1u);
  inst.subsets.push_back({2});
  EXPECT_THAT(inst.Problems(), IsEmpty());
}

TEST(SetCoverTest, IsCover) {
  const SetCoverInstance inst = ParseSetCover(ReadFixture("set_cover_9x5.sc"));
  EXPECT_TRUE(inst.IsCover(VertexSet(5, {0, 2, 4})));
  EXPECT_FALSE(inst.IsCover(VertexSet(5, {0, 2})));
}

TEST(MinimumSetCoverTest, FixtureNeedsThreeSubsets) {
  const auto cover = MinimumSetCover(ParseSetCover(ReadFixture("set_cover_9x5.sc")));
  ASSERT_TRUE(cover.has_value());
  EXPECT_EQ(cover->size(), 3);
  EXPECT_EQ(*cover, VertexSet(5, {0, 2, 4}));
}

TEST(MinimumSetCoverTest, MatchesEnumeration) {
  std::mt19937_64 rng(testing::kSeedSetCover + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 7);
    const SetCoverInstance inst =
        testing::RandomSetCover(1 + static_cast<int>(rng() % 8), m, rng);
    int best = m + 1;
    for (uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      if (inst.IsCover(testing::FromMask(m, mask))) {
        best = std::min(best, std::popcount(mask));
      }
    }
    const auto cover = MinimumSetCover(inst);
    ASSERT_TRUE(cover.has_value());
    EXPECT_EQ(cover->size(), best);
    EXPECT_TRUE(inst.IsCover(*cover));
  }
}

TEST(MinimumSetCoverTest, AbsentWhenUniverseNotCovered) {
  EXPECT_EQ(MinimumSetCover(SetCoverInstance{2, {{0}}}), std::nullopt);
}

}  // namespace
}  // namespace secdom
