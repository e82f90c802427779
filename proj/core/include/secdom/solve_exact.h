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

// Exact minimum-size solvers for the five domination variants.
//
// Sizes are tried in increasing order starting from max(ceil(n/(D+1)), 1)
// where D is the maximum degree. For each size k a depth-first search
// extends a partial set: while some vertex is undominated it branches on
// the members of that vertex's closed neighborhood; for the secure variants
// it then branches on the radius-3 ball of an undefended vertex (any
// feasible superset must add a vertex there). Among all minimum sets the
// lexicographically smallest one is returned.

#ifndef SECDOM_SOLVE_EXACT_H_
#define SECDOM_SOLVE_EXACT_H_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "secdom/graph.h"
#include "secdom/verify.h"

namespace secdom {

// The search packs vertex sets into one machine word.
inline constexpr int kSolverOrderLimit = 64;

struct SearchBudget {
  int max_n = 24;
  long long max_candidates = 100'000'000;
  std::chrono::milliseconds time_limit{60'000};

  // Throws std::invalid_argument unless every cap is positive.
  void Validate() const;
};

struct SearchOptions {
  // false: plain lexicographic subset enumeration checked with VerifySet.
  bool prune = true;
};

struct Solution {
  Variant variant = Variant::kDom;
  // Absent when no feasible set exists (exhausted) or the budget ran out.
  std::optional<int> value;
  std::optional<VertexSet> witness;
  // Search nodes (pruned) or candidate sets (unpruned) examined.
  long long explored = 0;
  bool exhausted = false;
};

enum class Decision { kYes, kNo, kUnknown };

struct DecisionResult {
  Decision answer = Decision::kUnknown;
  std::optional<VertexSet> witness;
  long long explored = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requires g.order() <= budget.max_n (and <= kSolverOrderLimit).
Solution Solve(const Graph& g, Variant variant, const SearchBudget& budget = {},
               const SearchOptions& options = {});

// Is there a feasible set of size at most k?
DecisionResult SolveDecision(const Graph& g, Variant variant, int k,
                             const SearchBudget& budget = {});

// Every minimum feasible set, lexicographically sorted. Requires
// g.order() <= min(budget.max_n, 16); throws BudgetExceeded when the
// enumeration runs over budget.
std::vector<VertexSet> AllMinimumSets(const Graph& g, Variant variant,
                                      const SearchBudget& budget = {});

}  // namespace secdom

#endif  // SECDOM_SOLVE_EXACT_H_
