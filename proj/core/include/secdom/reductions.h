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

// Gadget constructions that turn an instance of one problem into a graph
// for another, with maps for carrying solutions across in both directions.
//
//   kind            source problem            gadget problem   offset
//   kSetCoverSplit  set cover                 IDOM             m
//   kPeb            DOM on a bipartite graph  IDOM             l = |Y1|
//   kInSDom         InDOM                     InSDOM           n
//   kGp             DOM                       DOM              n
//   kApx            InDOM, max degree <= 3    InSDOM           3n
//
// A source optimum k corresponds to a gadget optimum k + offset. Every
// vertex of a gadget carries a label such as "c_2" or "a_5" (1-based), and
// `roles` lists the ids of each role family in index order.

#ifndef SECDOM_REDUCTIONS_H_
#define SECDOM_REDUCTIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/classes.h"
#include "secdom/graph.h"
#include "secdom/set_cover.h"
#include "secdom/verify.h"

namespace secdom {

enum class ReductionKind { kSetCoverSplit, kPeb, kInSDom, kGp, kApx };

// "setcover", "peb", "insdm", "gp", "apx".
std::string_view ReductionName(ReductionKind kind);
std::optional<ReductionKind> ParseReductionKind(std::string_view name);

// Which vertices of Y receive a pendant path in the bipartite reduction.
enum class Y1Rule {
  // y is chosen iff no neighbor of y has degree 1.
  kNoPendantNeighbor,
  // y is chosen iff some neighbor of y has degree 1.
  kHasPendantNeighbor,
};

struct ReductionOutput {
  ReductionKind kind = ReductionKind::kGp;
  Graph graph;
  int offset = 0;
  std::map<std::string, std::vector<int>> roles;
  // Gadget id -> id in the source graph, or -1 for added vertices. Empty for
  // set cover, whose source has no graph.
  std::vector<int> source_id;

  std::optional<Graph> source_graph;
  std::optional<SetCoverInstance> source_instance;
  // Bipartite reduction only: the ordering built from the construction,
  // present when it verifies.
  std::optional<EliminationOrdering> sigma;

  int MapParameter(int k) const { return k + offset; }
  // Problem solved on the gadget / on the source (kDom for set cover, where
  // the source "variant" is only a placeholder).
  Variant gadget_variant() const;
  Variant source_variant() const;
};

// I = {x_i}: 0..n-1, K = {c_j}: n..n+m-1, L = {u_j}: n+m.., J = {v_j}:
// n+2m... Edges x_i c_j for x_i in C_j, a clique on K and L, and u_j v_j.
// Throws std::invalid_argument for an invalid instance.
ReductionOutput SetCoverToSplit(const SetCoverInstance& inst);

// Keeps g, then appends a_i, b_i, c_i (path y_i a_i b_i c_i) for each
// y_i in Y1 in ascending order. `y_side` is the Y part; by default the
// second part of Bipartition(g). Throws std::invalid_argument when g is not
// bipartite or `y_side` is not one side of a bipartition.
ReductionOutput BipartiteDomToPeb(
    const Graph& g, Y1Rule rule = Y1Rule::kNoPendantNeighbor,
    const std::optional<VertexSet>& y_side = std::nullopt);

// v_i: i, a_i: n+i, b_i: 2n+i, with path v_i a_i b_i.
ReductionOutput InDomToInSDom(const Graph& g);

// v_i: i, a_i: n+i, b_i: 2n+i, c_i: 3n+i, with path v_i a_i b_i c_i.
// Throws std::invalid_argument when g is disconnected or empty.
ReductionOutput GpGraph(const Graph& g);

// v_i: i, p_i: n+i, q_i: 2n+i, r_i: 3n+i, s_i: 4n+i, t_i: 5n+i, with edges
// v_i q_i, q_i p_i, v_i r_i, r_i s_i, r_i t_i. Throws std::invalid_argument
// when the maximum degree of g exceeds 3.
ReductionOutput ApxGadget(const Graph& g);

// Maps a source solution to a gadget solution of size |solution| + offset
// (at most that for the bipartite reduction). For set cover, `solution`
// ranges over subset indices. The result is verified; throws
// std::invalid_argument when `solution` is not a valid source solution.
VertexSet ForwardWitness(const ReductionOutput& out, const VertexSet& solution);

// The independent secure dominating set of size 2n of a gp gadget:
// every a_i and c_i.
VertexSet GpInSDSWitness(const ReductionOutput& out);

// Maps a verified gadget solution back to a source solution of size at most
// |witness| - offset. Throws std::invalid_argument when `witness` fails
// verification for the gadget problem.
VertexSet ExtractSolution(const ReductionOutput& out, const VertexSet& witness);

// Set-cover reduction: subsets C_j with c_j in `ids`, plus for each x_i in
// `ids` the smallest j with x_i in C_j. Result ranges over subset indices.
VertexSet ExtractCover(const ReductionOutput& out, const VertexSet& ids);

}  // namespace secdom

#endif  // SECDOM_REDUCTIONS_H_
