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

#include "secdom/vertex_set.h"

#include <stdexcept>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace secdom {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(VertexSetTest, InsertEraseAndQuery) {
  VertexSet s(10);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(7);
  s.insert(3);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_FALSE(s.contains(10));
  s.erase(3);
  EXPECT_THAT(s.members(), ElementsAre(7));
}

TEST(VertexSetTest, RejectsOutOfRangeInsert) {
  VertexSet s(4);
  EXPECT_THROW(s.insert(4), std::out_of_range);
  EXPECT_THROW(s.insert(-1), std::out_of_range);
}

TEST(VertexSetTest, WorksAcrossWordBoundaries) {
  VertexSet s(200, {0, 63, 64, 127, 128, 199});
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(0), 63);
  EXPECT_EQ(s.next(63), 64);
  EXPECT_EQ(s.next(199), -1);
  const VertexSet c = s.complement();
  EXPECT_EQ(c.size(), 194);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_EQ((c | s).size(), 200);
}

TEST(VertexSetTest, SetAlgebra) {
  const VertexSet a(8, {1, 2, 3});
  const VertexSet b(8, {3, 4});
  EXPECT_THAT((a | b).members(), ElementsAre(1, 2, 3, 4));
  EXPECT_THAT((a & b).members(), ElementsAre(3));
  EXPECT_THAT((a - b).members(), ElementsAre(1, 2));
  EXPECT_TRUE(VertexSet(8, {1, 3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
}

TEST(VertexSetTest, MixingUniversesIsAnError) {
  VertexSet a(4);
  EXPECT_THROW(a |= VertexSet(5), std::invalid_argument);
}

TEST(VertexSetTest, FullAndToString) {
  EXPECT_EQ(VertexSet::Full(3).ToString(), "{0, 1, 2}");
  EXPECT_EQ(VertexSet(3).ToString(), "{}");
  EXPECT_THAT(VertexSet::Full(0).members(), IsEmpty());
}

TEST(VertexSetTest, LexOrderComparesMemberSequences) {
  EXPECT_TRUE(LexLess(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
  EXPECT_TRUE(LexLess(VertexSet(5, {1}), VertexSet(5, {1, 2})));
  EXPECT_FALSE(LexLess(VertexSet(5, {1, 2}), VertexSet(5, {1, 2})));
}

TEST(VertexSetTest, ParsesCommaAndSpaceSeparatedLists) {
  EXPECT_EQ(ParseVertexList("1,3,5", 7), VertexSet(7, {1, 3, 5}));
  EXPECT_EQ(ParseVertexList("1 3  5", 7), VertexSet(7, {1, 3, 5}));
  EXPECT_EQ(ParseVertexList("", 7), VertexSet(7));
  EXPECT_THROW(ParseVertexList("1,x", 7), std::invalid_argument);
  EXPECT_THROW(ParseVertexList("7", 7), std::invalid_argument);
}

}  // namespace
}  // namespace secdom
