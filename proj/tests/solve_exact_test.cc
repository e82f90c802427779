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

#include "secdom/solve_exact.h"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/test_graphs.h"

namespace secdom {
void PrintTo(Decision d, std::ostream* os) {
  *os << (d == Decision::kYes ? "yes" : d == Decision::kNo ? "no" : "unknown");
}

namespace {

using ::testing::ElementsAre;
using ::testing::Optional;

Graph Path(int n) { return Generate(FamilySpec::Path(n)); }
Graph Cycle(int n) { return Generate(FamilySpec::Cycle(n)); }

void ExpectSolutionInvariants(const Graph& g, const Solution& sol) {
  EXPECT_EQ(sol.value.has_value(), sol.witness.has_value());
  if (sol.witness) {
    EXPECT_EQ(sol.witness->size(), *sol.value);
    EXPECT_TRUE(VerifySet(g, *sol.witness, sol.variant).holds);
  }
}

TEST(SolveTest, CycleFiveHasNoIndependentSecureDominatingSet) {
  const Solution sol = Solve(Cycle(5), Variant::kInSDom);
  EXPECT_EQ(sol.value, std::nullopt);
  EXPECT_EQ(sol.witness, std::nullopt);
  EXPECT_TRUE(sol.exhausted);
}

TEST(SolveTest, FamilyExamples) {
  EXPECT_THAT(Solve(Generate(FamilySpec::Complete(6)), Variant::kInSDom).value,
              Optional(1));
  EXPECT_THAT(Solve(Path(10), Variant::kInSDom).value, Optional(5));
  EXPECT_THAT(Solve(Generate(FamilySpec::CompleteBipartite(2, 3)), Variant::kInSDom).value,
              Optional(2));
  EXPECT_THAT(Solve(Generate(FamilySpec::Star(4)), Variant::kInSDom).value, Optional(4));
}

TEST(SolveTest, EmptyGraphHasValueZero) {
  for (Variant v : kAllVariants) {
    const Solution sol = Solve(Graph::FromEdges(0, {}), v);
    EXPECT_THAT(sol.value, Optional(0));
    EXPECT_TRUE(sol.exhausted);
  }
}

TEST(SolveTest, IsolatedVerticesAreForced) {
  const Graph g = Graph::FromEdges(5, {{0, 1}, {1, 2}});
  for (Variant v : kAllVariants) {
    const Solution sol = Solve(g, v);
    ASSERT_TRUE(sol.witness.has_value()) << VariantName(v);
    EXPECT_TRUE(sol.witness->contains(3));
    EXPECT_TRUE(sol.witness->contains(4));
  }
}

TEST(SolveTest, WitnessIsLexicographicallySmallest) {
  EXPECT_EQ(Solve(Cycle(6), Variant::kDom).witness, VertexSet(6, {0, 3}));
  EXPECT_EQ(Solve(Path(10), Variant::kInSDom).witness, VertexSet(10, {0, 2, 4, 6, 8}));
}

TEST(SolveTest, RejectsGraphsAboveTheCap) {
  SearchBudget budget;
  budget.max_n = 5;
  EXPECT_THROW(Solve(Path(6), Variant::kDom, budget), std::invalid_argument);
  budget.max_n = 100;
  EXPECT_THROW(Solve(Path(65), Variant::kDom, budget), std::invalid_argument);
}

TEST(SolveTest, BudgetExhaustionIsReported) {
  SearchBudget budget;
  budget.max_candidates = 3;
  const Solution sol = Solve(Generate(FamilySpec::Grid(4, 5)), Variant::kInSDom, budget);
  EXPECT_FALSE(sol.exhausted);
  EXPECT_EQ(sol.value, std::nullopt);
  EXPECT_EQ(sol.witness, std::nullopt);
}

TEST(SolveTest, BudgetCapsMustBePositive) {
  SearchBudget budget;
  budget.max_candidates = 0;
  EXPECT_THROW(budget.Validate(), std::invalid_argument);
  EXPECT_THROW(Solve(Path(3), Variant::kDom, budget), std::invalid_argument);
  budget = SearchBudget{};
  budget.time_limit = std::chrono::milliseconds(0);
  EXPECT_THROW(budget.Validate(), std::invalid_argument);
}

TEST(SolveDecisionTest, Examples) {
  const DecisionResult yes = SolveDecision(Path(7), Variant::kInSDom, 3);
  EXPECT_EQ(yes.answer, Decision::kYes);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_LE(yes.witness->size(), 3);
  EXPECT_TRUE(VerifySet(Path(7), *yes.witness, Variant::kInSDom).holds);

  EXPECT_EQ(SolveDecision(Path(7), Variant::kInSDom, 2).answer, Decision::kNo);

  const DecisionResult c3 = SolveDecision(Cycle(3), Variant::kInSDom, 1);
  EXPECT_EQ(c3.answer, Decision::kYes);
  ASSERT_TRUE(c3.witness.has_value());
  EXPECT_EQ(c3.witness->size(), 1);
}

TEST(SolveDecisionTest, NoForInfeasibleGraphAtAnyK) {
  EXPECT_EQ(SolveDecision(Cycle(5), Variant::kInSDom, 5).answer, Decision::kNo);
  EXPECT_THROW(SolveDecision(Cycle(5), Variant::kInSDom, -1), std::invalid_argument);
}

TEST(SolveDecisionTest, UnknownWhenBudgetRunsOut) {
  SearchBudget budget;
  budget.max_candidates = 2;
  EXPECT_EQ(SolveDecision(Generate(FamilySpec::Grid(4, 5)), Variant::kInSDom, 6, budget)
                .answer,
            Decision::kUnknown);
}

TEST(AllMinimumSetsTest, Examples) {
  EXPECT_THAT(AllMinimumSets(Generate(FamilySpec::Complete(3)), Variant::kInSDom),
              ElementsAre(VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})));
  EXPECT_THAT(AllMinimumSets(Path(3), Variant::kDom), ElementsAre(VertexSet(3, {1})));
  EXPECT_THAT(AllMinimumSets(Cycle(4), Variant::kInSDom),
              ElementsAre(VertexSet(4, {0, 2}), VertexSet(4, {1, 3})));
  EXPECT_TRUE(AllMinimumSets(Cycle(5), Variant::kInSDom).empty());
}

TEST(AllMinimumSetsTest, RejectsLargeGraphs) {
  EXPECT_THROW(AllMinimumSets(Path(17), Variant::kDom), std::invalid_argument);
}

TEST(AllMinimumSetsTest, MatchesSubsetCountOnSmallGraphs) {
  std::mt19937_64 rng(testing::kSeedRandomGraphs);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = testing::RandomGraph(n, 0.4, rng);
    for (Variant v : kAllVariants) {
      const std::vector<VertexSet> all = AllMinimumSets(g, v);
      const testing::BruteResult brute = testing::BruteForceMinimum(g, v);
      int expected = 0;
      if (brute.value) {
        for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
          if (std::popcount(mask) == *brute.value && testing::NaiveHolds(g, mask, v)) {
            ++expected;
          }
        }
      }
      ASSERT_EQ(static_cast<int>(all.size()), expected) << VariantName(v);
      for (size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(LexLess(all[i - 1], all[i]));
    }
  }
}

// Value and witness against plain enumeration on every graph with at most
// six vertices.
TEST(SolvePropertyTest, MatchesBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      for (Variant v : kAllVariants) {
        const Solution sol = Solve(g, v);
        const testing::BruteResult brute = testing::BruteForceMinimum(g, v);
        ASSERT_TRUE(sol.exhausted);
        ASSERT_EQ(sol.value, brute.value) << VariantName(v) << " n=" << n;
        ASSERT_EQ(sol.witness, brute.witness) << VariantName(v) << " n=" << n;
      }
    }
  }
}

TEST(SolvePropertyTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(testing::kSeedRandomGraphs + 1);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 6);
    const Graph g = testing::RandomGraph(n, density(rng), rng);
    for (Variant v : kAllVariants) {
      const Solution sol = Solve(g, v);
      const testing::BruteResult brute = testing::BruteForceMinimum(g, v);
      ASSERT_EQ(sol.value, brute.value) << VariantName(v) << " trial " << trial;
      ASSERT_EQ(sol.witness, brute.witness) << VariantName(v) << " trial " << trial;
      ExpectSolutionInvariants(g, sol);
    }
  }
}

TEST(SolvePropertyTest, PruningNeverChangesResults) {
  const SearchOptions plain{.prune = false};
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      for (Variant v : kAllVariants) {
        const Solution pruned = Solve(g, v);
        const Solution unpruned = Solve(g, v, {}, plain);
        ASSERT_EQ(pruned.value, unpruned.value);
        ASSERT_EQ(pruned.witness, unpruned.witness);
        ASSERT_EQ(pruned.exhausted, unpruned.exhausted);
      }
    }
  }
  std::mt19937_64 rng(testing::kSeedRandomGraphs + 2);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomGraph(8, 0.1 + 0.002 * trial, rng);
    for (Variant v : kAllVariants) {
      const Solution pruned = Solve(g, v);
      const Solution unpruned = Solve(g, v, {}, plain);
      ASSERT_EQ(pruned.value, unpruned.value);
      ASSERT_EQ(pruned.witness, unpruned.witness);
    }
  }
}

TEST(SolvePropertyTest, ConsistentWithDecisionForm) {
  std::mt19937_64 rng(testing::kSeedRandomGraphs + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = testing::RandomGraph(n, 0.35, rng);
    for (Variant v : kAllVariants) {
      const Solution sol = Solve(g, v);
      if (!sol.value) {
        EXPECT_EQ(SolveDecision(g, v, n).answer, Decision::kNo);
        continue;
      }
      EXPECT_EQ(SolveDecision(g, v, *sol.value).answer, Decision::kYes);
      if (*sol.value > 0) {
        EXPECT_EQ(SolveDecision(g, v, *sol.value - 1).answer, Decision::kNo);
      }
    }
  }
}

void ExpectChain(const Graph& g, const std::string& what) {
  const auto value = [&](Variant v) { return Solve(g, v).value; };
  const std::optional<int> dom = value(Variant::kDom);
  const std::optional<int> sdom = value(Variant::kSDom);
  const std::optional<int> idom = value(Variant::kIDom);
  const std::optional<int> indom = value(Variant::kInDom);
  const std::optional<int> insdom = value(Variant::kInSDom);
  ASSERT_TRUE(dom && sdom && idom && indom) << what;
  EXPECT_LE(*dom, *sdom) << what;
  EXPECT_LE(*dom, *idom) << what;
  EXPECT_LE(*idom, *indom) << what;
  if (insdom) {
    EXPECT_LE(*sdom, *insdom) << what;
    EXPECT_LE(*indom, *insdom) << what;
  }
}

TEST(SolvePropertyTest, ParameterChainOnAllConnectedGraphs) {
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> graphs = testing::AllConnectedGraphs(n);
    for (size_t i = 0; i < graphs.size(); ++i) {
      ExpectChain(graphs[i], "n=" + std::to_string(n) + " #" + std::to_string(i));
    }
  }
}

TEST(SolvePropertyTest, ParameterChainOnRandomGraphs) {
  std::mt19937_64 rng(testing::kSeedRandomGraphs + 4);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    ExpectChain(testing::RandomGraph(n, density(rng), rng), "trial " + std::to_string(trial));
  }
}

// Deleting edges can only raise the independent secure domination number.
TEST(SolvePropertyTest, SpanningSubgraphsNeverDecreaseValue) {
  std::mt19937_64 rng(testing::kSeedSubgraphs);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = testing::RandomGraph(n, 0.5, rng);
    std::vector<Edge> kept;
    std::bernoulli_distribution keep(0.75);
    for (const Edge& e : g.edges()) {
      if (keep(rng)) kept.push_back(e);
    }
    const Graph sub = Graph::FromEdges(n, kept);
    const Solution whole = Solve(g, Variant::kInSDom);
    const Solution part = Solve(sub, Variant::kInSDom);
    if (whole.value && part.value) {
      EXPECT_GE(*part.value, *whole.value) << "trial " << trial;
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

// Deleting edge 3-4 here lowers the value from 3 to 2, so the value is not
// monotone under spanning subgraphs in general.
TEST(SolvePropertyTest, EdgeDeletionCanLowerValue) {
  const Graph g = Graph::FromEdges(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  const Graph sub = Graph::FromEdges(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}});
  EXPECT_THAT(Solve(g, Variant::kInSDom).value, Optional(3));
  const Solution part = Solve(sub, Variant::kInSDom);
  EXPECT_THAT(part.value, Optional(2));
  EXPECT_EQ(part.witness, VertexSet(5, {3, 4}));
}

}  // namespace
}  // namespace secdom
