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

#ifndef SECDOM_GRAPH_H_
#define SECDOM_GRAPH_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secdom/vertex_set.h"

namespace secdom {

using Edge = std::pair<int, int>;

// Upper bound on the order of graphs built by products and generators.
inline constexpr int kDefaultMaxOrder = 1 << 20;

// Finite, simple, undirected graph on vertices 0..n-1 with per-vertex
// neighbor bitsets. Immutable once built; optional per-vertex text labels
// are carried for bookkeeping and never read by the algorithms.
class Graph {
 public:
  Graph() = default;

  // Builds the graph with the given edges (symmetric closure, duplicates
  // collapsed). Throws std::invalid_argument on an out-of-range endpoint or
  // a self-loop, naming the offending pair.
  static Graph FromEdges(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});
  static Graph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int num_edges() const { return num_edges_; }

  const VertexSet& neighbors(int v) const { return adj_[Index(v)]; }
  VertexSet closed_neighborhood(int v) const;
  bool adjacent(int u, int v) const { return adj_[Index(u)].contains(v); }
  int degree(int v) const { return adj_[Index(v)].size(); }
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::Full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the vertex has no label.
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  Graph WithLabels(std::vector<std::string> labels) const;

  bool IsConnected() const;

  // Same vertex count and adjacency; labels are ignored.
  bool SameAdjacency(const Graph& other) const;

 private:
  size_t Index(int v) const;

  int n_ = 0;
  int num_edges_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kStar,
  kWheel,
  kGrid,
  kApexJoin,
};

// Named graph family with its size parameters. Construct through the
// factories, which validate parameters.
struct FamilySpec {
  Family kind = Family::kPath;
  int a = 0;  // n, p, q (star), m (grid)
  int b = 0;  // q (complete bipartite), k (grid)
  std::shared_ptr<const Graph> base;  // ApexJoin only

  static FamilySpec Path(int n);
  static FamilySpec Cycle(int n);
  static FamilySpec Complete(int n);
  // Normalizes so that p <= q.
  static FamilySpec CompleteBipartite(int p, int q);
  static FamilySpec Star(int q);
  static FamilySpec Wheel(int n);
  static FamilySpec Grid(int m, int k);
  static FamilySpec ApexJoin(Graph g);

  std::string ToString() const;
};

// Parses "path 10", "kbip 2 3", "grid 9 10", ... (see README for the list
// of family names). ApexJoin cannot be expressed this way.
FamilySpec ParseFamilySpec(std::span<const std::string> tokens);

// Canonical numbering: Path/Cycle v_i -> i-1; CompleteBipartite part A is
// 0..p-1 and part B is p..p+q-1 (Star is K_{1,q}, center 0); Wheel W_n has
// rim cycle 0..n-1 and hub n; Grid m x k maps (r, c) -> r*k + c; ApexJoin
// appends the apex as vertex n.
Graph Generate(const FamilySpec& spec);

// (a, b) -> a * |V(h)| + b. Throws if the product order exceeds max_order.
Graph CartesianProduct(const Graph& g, const Graph& h,
                       int max_order = kDefaultMaxOrder);

// K_1 + G: a new vertex n adjacent to every vertex of g.
Graph ApexJoin(const Graph& g);

// Induced subgraph relabelled to 0..|keep|-1 in ascending order.
Graph InducedSubgraph(const Graph& g, const VertexSet& keep);

}  // namespace secdom

#endif  // SECDOM_GRAPH_H_
