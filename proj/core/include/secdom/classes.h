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

// Recognizers for bipartite, split, threshold and perfect elimination
// bipartite graphs. Each recognizer returns a certificate that has been
// checked against the graph before it is handed out.

#ifndef SECDOM_CLASSES_H_
#define SECDOM_CLASSES_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secdom/graph.h"

namespace secdom {

// Two-coloring by BFS layering; in each component the smallest vertex goes
// to the first part. Absent iff g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> Bipartition(const Graph& g);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;

  bool operator==(const SplitPartition&) const = default;
};

bool IsSplitPartition(const Graph& g, const SplitPartition& p);

// Degree-sequence test: with degrees d_1 >= ... >= d_n and
// m = max{i : d_i >= i - 1}, g is split iff
// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i; the m highest-degree vertices
// then form the clique.
std::optional<SplitPartition> FindSplitPartition(const Graph& g);

struct ThresholdCertificate {
  SplitPartition partition;
  // N[x_1] is a subset of N[x_2], and so on.
  std::vector<int> clique_order;
  // N(y_1) is a superset of N(y_2), and so on.
  std::vector<int> independent_order;
};

bool IsThresholdCertificate(const Graph& g, const ThresholdCertificate& cert);

// Repeatedly removes an isolated vertex (into the independent side) or a
// vertex adjacent to all remaining ones (into the clique side). When every
// vertex peeled so far was universal, the last vertex joins the clique.
std::optional<ThresholdCertificate> RecognizeThreshold(const Graph& g);

// Minimum independent secure dominating set of a connected threshold graph:
// I plus one clique vertex with no neighbor in I if such a vertex exists
// (the smallest one), otherwise I. Throws std::invalid_argument when g is
// empty, disconnected or not threshold.
VertexSet ThresholdInSDS(const Graph& g);

struct EliminationOrdering {
  std::vector<Edge> edges;
  // eliminated[i] = endpoints of edges[0..i].
  std::vector<VertexSet> eliminated;
};

// (u, v) is bisimplicial in g[alive]: both ends alive and adjacent, and
// every alive neighbor of v is adjacent to every alive neighbor of u.
bool IsBisimplicial(const Graph& g, const VertexSet& alive, int u, int v);

// Empty string when the ordering is valid for g; otherwise the reason.
std::string CheckEliminationOrdering(const Graph& g,
                                     const EliminationOrdering& ordering);

enum class PebStatus {
  kPresent,     // ordering found and verified
  kAbsent,      // not bipartite, or exhaustive search proved none exists
  kUnresolved,  // greedy stalled and the graph is too large to exhaust
};

struct PebResult {
  PebStatus status = PebStatus::kUnresolved;
  std::optional<EliminationOrdering> ordering;
};

inline constexpr int kPebExhaustiveLimit = 20;

// Greedy elimination of the lexicographically first bisimplicial edge; if
// that stalls with edges left, a memoized exhaustive search for
// n <= kPebExhaustiveLimit.
PebResult PerfectEdgeElimination(const Graph& g);

}  // namespace secdom

#endif  // SECDOM_CLASSES_H_
