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

// Independent secure domination numbers of named graph families, with
// explicit witness sets. Every witness is re-verified before it is
// returned; a mismatch between a formula and its witness throws.

#ifndef SECDOM_FAMILIES_H_
#define SECDOM_FAMILIES_H_

#include <optional>
#include <stdexcept>
#include <string>

#include "secdom/graph.h"
#include "secdom/solve_exact.h"

namespace secdom {

struct ClosedFormResult {
  // Absent when no independent secure dominating set exists, or when the
  // family only has an upper bound (grids too large for the exact solver).
  std::optional<int> value;
  std::optional<VertexSet> witness;
  // Grids: ceil(mk/3) + 4.
  std::optional<int> upper_bound;
  // Which result produced the value, e.g. "path formula ceil(3n/7)".
  std::string source;
};

class WitnessConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int CeilDiv(int a, int b);

// Closed-form value where one is known; small cases outside a formula's
// range (P_1..P_3, C_3, C_5, W_3, W_5) and apex joins go through the exact
// solver.
ClosedFormResult ClosedForm(const FamilySpec& spec,
                            const SearchBudget& budget = {});

// Independent secure dominating set of P_n of size ceil(3n/7): the vertices
// 2, 4, 6 (1-based) of every full block of seven, plus 1, 3, 5 of the tail
// as needed. Requires n >= 4.
VertexSet PathWitness(int n);

int GridUpperBound(int m, int k);

struct GridWitnessResult {
  VertexSet witness;
  int base_size = 0;    // size of the diagonal pattern before repair
  int residue = 0;      // t in (r + c) = t (mod 3)
};

// Diagonal pattern {(r, c) : (r + c) = t (mod 3)} with t = 0, then a
// bounded corner repair (at most 4 additions and 2 removals inside the 4x4
// block of each corner). Other residues are tried only if t = 0 cannot be
// repaired. Throws WitnessConstructionError if no verified set within
// GridUpperBound(m, k) is found.
GridWitnessResult GridWitnessDetailed(int m, int k);
VertexSet GridWitness(int m, int k);

}  // namespace secdom

#endif  // SECDOM_FAMILIES_H_
