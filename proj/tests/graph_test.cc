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

#include "secdom/graph.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "secdom/graph_io.h"

namespace secdom {
namespace {

using ::testing::Each;
using ::testing::ElementsAre;

void ExpectWellFormed(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v));
    g.neighbors(v).for_each([&](int w) { EXPECT_TRUE(g.adjacent(w, v)); });
  }
}

std::vector<FamilySpec> SampleSpecs() {
  return {FamilySpec::Path(1),    FamilySpec::Path(9),
          FamilySpec::Cycle(3),   FamilySpec::Cycle(8),
          FamilySpec::Complete(1), FamilySpec::Complete(6),
          FamilySpec::CompleteBipartite(4, 2), FamilySpec::Star(5),
          FamilySpec::Wheel(3),   FamilySpec::Wheel(9),
          FamilySpec::Grid(1, 1), FamilySpec::Grid(3, 3),
          FamilySpec::Grid(4, 7), FamilySpec::ApexJoin(Generate(FamilySpec::Path(4)))};
}

TEST(GraphTest, BuildsPathFromEdges) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_THAT(g.degree_sequence(), ElementsAre(1, 2, 1));
}

TEST(GraphTest, SingleVertexHasNoEdges) {
  const Graph g = Graph::FromEdges(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(GraphTest, CollapsesDuplicateEdges) {
  const Graph g = Graph::FromEdges(4, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(GraphTest, RejectsSelfLoopsAndBadEndpoints) {
  try {
    Graph::FromEdges(3, {{1, 1}});
    FAIL() << "self-loop accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("(1, 1)"));
  }
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(3, {{-1, 0}}), std::invalid_argument);
}

TEST(GraphTest, CycleFiveIsTwoRegular) {
  const Graph g = Generate(FamilySpec::Cycle(5));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.num_edges(), 5);
  EXPECT_THAT(g.degree_sequence(), Each(2));
}

TEST(GraphTest, TwoByTwoGridIsFourCycle) {
  const Graph g = Generate(FamilySpec::Grid(2, 2));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_THAT(g.degree_sequence(), Each(2));
}

TEST(GraphTest, WheelSevenHasHubOfDegreeSeven) {
  const Graph g = Generate(FamilySpec::Wheel(7));
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.degree(7), 7);
  for (int v = 0; v < 7; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(GraphTest, WheelIsApexJoinOfCycle) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_TRUE(Generate(FamilySpec::Wheel(n))
                    .SameAdjacency(ApexJoin(Generate(FamilySpec::Cycle(n)))));
  }
}

TEST(GraphTest, CompleteBipartiteNumbering) {
  const FamilySpec spec = FamilySpec::CompleteBipartite(5, 2);
  EXPECT_EQ(spec.a, 2);
  EXPECT_EQ(spec.b, 5);
  const Graph g = Generate(spec);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(2, 6));
  EXPECT_EQ(g.num_edges(), 10);
}

TEST(GraphTest, StarCenterIsZero) {
  const Graph g = Generate(FamilySpec::Star(4));
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(g.num_edges(), 4);
}

TEST(GraphTest, FactoriesValidateParameters) {
  EXPECT_THROW(FamilySpec::Path(0), std::invalid_argument);
  EXPECT_THROW(FamilySpec::Cycle(2), std::invalid_argument);
  EXPECT_THROW(FamilySpec::Wheel(2), std::invalid_argument);
  EXPECT_THROW(FamilySpec::Grid(0, 3), std::invalid_argument);
  EXPECT_THROW(FamilySpec::CompleteBipartite(0, 3), std::invalid_argument);
}

TEST(GraphTest, GridEdgeCount) {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 6; ++k) {
      const Graph g = Generate(FamilySpec::Grid(m, k));
      EXPECT_EQ(g.order(), m * k);
      EXPECT_EQ(g.num_edges(), m * (k - 1) + k * (m - 1));
      if (m * k > 1) {
        EXPECT_TRUE(g.adjacent(0, 1));
      }
    }
  }
}

TEST(GraphTest, ProductOfTwoEdgesIsSquare) {
  const Graph p2 = Generate(FamilySpec::Path(2));
  EXPECT_TRUE(CartesianProduct(p2, p2).SameAdjacency(Generate(FamilySpec::Cycle(4))) ||
              CartesianProduct(p2, p2).SameAdjacency(Generate(FamilySpec::Grid(2, 2))));
  EXPECT_EQ(CartesianProduct(p2, p2).num_edges(), 4);
}

TEST(GraphTest, NineByTenGrid) {
  const Graph g = CartesianProduct(Generate(FamilySpec::Path(9)),
                                   Generate(FamilySpec::Path(10)));
  EXPECT_EQ(g.order(), 90);
  EXPECT_EQ(g.num_edges(), 9 * 9 + 10 * 8);
  EXPECT_TRUE(g.SameAdjacency(Generate(FamilySpec::Grid(9, 10))));
}

TEST(GraphTest, ProductWithSingleVertexIsIdentity) {
  const Graph k1 = Generate(FamilySpec::Complete(1));
  const Graph g = Generate(FamilySpec::Wheel(5));
  EXPECT_TRUE(CartesianProduct(k1, g).SameAdjacency(g));
  EXPECT_TRUE(CartesianProduct(g, k1).SameAdjacency(g));
}

TEST(GraphTest, ProductRejectsOversizedResult) {
  const Graph g = Generate(FamilySpec::Path(10));
  EXPECT_THROW(CartesianProduct(g, g, 99), std::invalid_argument);
}

TEST(GraphTest, ApexJoinAddsUniversalVertex) {
  const Graph g = ApexJoin(Generate(FamilySpec::Path(4)));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(g.num_edges(), 3 + 4);
}

TEST(GraphTest, InducedSubgraphRelabels) {
  const Graph g = Generate(FamilySpec::Cycle(6));
  const Graph h = InducedSubgraph(g, VertexSet(6, {1, 2, 3, 5}));
  EXPECT_EQ(h.order(), 4);
  EXPECT_EQ(h.num_edges(), 2);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(1, 2));
  EXPECT_EQ(h.degree(3), 0);
}

TEST(GraphTest, LabelsAreCarriedButOptional) {
  const Graph g = Generate(FamilySpec::Path(3));
  EXPECT_FALSE(g.has_labels());
  EXPECT_EQ(g.label(1), "");
  const Graph h = g.WithLabels({"a", "b", "c"});
  EXPECT_EQ(h.label(2), "c");
  EXPECT_TRUE(h.SameAdjacency(g));
  EXPECT_THROW(g.WithLabels({"a"}), std::invalid_argument);
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(Generate(FamilySpec::Grid(3, 4)).IsConnected());
  EXPECT_FALSE(Graph::FromEdges(4, {{0, 1}, {2, 3}}).IsConnected());
  EXPECT_TRUE(Graph::FromEdges(0, {}).IsConnected());
}

TEST(GraphTest, GeneratedFamiliesAreWellFormed) {
  for (const FamilySpec& spec : SampleSpecs()) {
    SCOPED_TRACE(spec.ToString());
    ExpectWellFormed(Generate(spec));
  }
}

TEST(GraphTest, ParsesFamilyTokens) {
  const std::vector<std::string> tokens = {"kbip", "3", "2"};
  const FamilySpec spec = ParseFamilySpec(tokens);
  EXPECT_EQ(spec.kind, Family::kCompleteBipartite);
  EXPECT_EQ(spec.a, 2);
  EXPECT_EQ(spec.b, 3);
  const std::vector<std::string> bad = {"grid", "3"};
  EXPECT_THROW(ParseFamilySpec(bad), std::invalid_argument);
  const std::vector<std::string> unknown = {"petersen"};
  EXPECT_THROW(ParseFamilySpec(unknown), std::invalid_argument);
}

TEST(GraphTest, SerializationRoundTripsOnFamilies) {
  for (const FamilySpec& spec : SampleSpecs()) {
    SCOPED_TRACE(spec.ToString());
    const Graph g = Generate(spec);
    for (GraphFormat format : {GraphFormat::kEdgeList, GraphFormat::kStructured}) {
      const std::string text = SerializeGraph(g, format);
      const Graph back = ParseGraph(text, format);
      EXPECT_TRUE(back.SameAdjacency(g));
      EXPECT_EQ(SerializeGraph(back, format), text);
    }
  }
}

}  // namespace
}  // namespace secdom
