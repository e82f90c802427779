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

// Membership predicates for the five domination variants.
//
//   kDom     dominating:           N[S] = V
//   kInDom   independent dominating
//   kIDom    isolate dominating:   dominating and G[S] has an isolated vertex
//   kSDom    secure dominating:    dominating, and every u outside S has a
//                                  neighbor v in S with (S - v) + u dominating
//   kInSDom  independent secure dominating
//
// The secure check re-tests full domination of every swapped set; it is the
// reference the solvers are measured against.

#ifndef SECDOM_VERIFY_H_
#define SECDOM_VERIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/graph.h"
#include "secdom/vertex_set.h"

namespace secdom {

enum class Variant { kDom, kInDom, kIDom, kSDom, kInSDom };

inline constexpr Variant kAllVariants[] = {Variant::kDom, Variant::kInDom,
                                           Variant::kIDom, Variant::kSDom,
                                           Variant::kInSDom};

// "dom", "indom", "idom", "sdom", "insdom".
std::string_view VariantName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

bool RequiresIndependence(Variant variant);
bool RequiresSecurity(Variant variant);

struct Violation {
  enum class Kind {
    kUndominated,      // vertex: nothing in S covers it
    kAdjacentPair,     // vertex, other: an edge inside S
    kUndefended,       // vertex: every neighbor in S fails the swap
    kNoIsolatedVertex  // G[S] has no isolated vertex
  };
  Kind kind;
  int vertex = -1;
  int other = -1;
  // For kUndefended: the neighbors of `vertex` in S, all of which failed.
  std::optional<VertexSet> failed_defenders;

  std::string ToString() const;
  bool operator==(const Violation&) const = default;
};

struct CertificateReport {
  Variant variant;
  bool holds = false;
  std::vector<Violation> violations;
};

bool IsDominating(const Graph& g, const VertexSet& s);
bool IsIndependent(const Graph& g, const VertexSet& s);

// {w not in S : N(w) and S meet exactly in {v}}. Requires v in S.
VertexSet ExternalPrivateNeighbors(const Graph& g, const VertexSet& s, int v);

// Neighbors v of u in S such that (S - v) + u dominates g. Requires u
// outside S.
VertexSet Defenders(const Graph& g, const VertexSet& s, int u);

bool IsSecureDominating(const Graph& g, const VertexSet& s);
bool IsIsolateDominating(const Graph& g, const VertexSet& s);

// Checks every condition of `variant` and lists all violations: undominated
// vertices, then edges inside S, then undefended vertices, then the missing
// isolate, each in ascending vertex order. Defense is evaluated only when S
// dominates. On the empty graph every variant holds for the empty set.
CertificateReport VerifySet(const Graph& g, const VertexSet& s,
                            Variant variant);

}  // namespace secdom

#endif  // SECDOM_VERIFY_H_
