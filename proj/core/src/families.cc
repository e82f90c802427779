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

#include "secdom/families.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <tuple>
#include <vector>

#include "secdom/verify.h"

namespace secdom {

namespace {

// Largest grid for which a witness is built and verified.
constexpr int kMaxGridOrder = 4096;
// Largest grid answered exactly by ClosedForm.
constexpr int kExactGridOrder = 20;

void RequireInSDS(const Graph& g, const VertexSet& s, const std::string& what) {
  const CertificateReport report = VerifySet(g, s, Variant::kInSDom);
  if (!report.holds) {
    std::string message = what + " witness " + s.ToString() +
                          " is not an independent secure dominating set";
    if (!report.violations.empty()) {
      message += ": " + report.violations.front().ToString();
    }
    throw WitnessConstructionError(message);
  }
}

ClosedFormResult FromSolver(const Graph& g, const SearchBudget& budget,
                            std::string source) {
  const Solution sol = Solve(g, Variant::kInSDom, budget);
  if (!sol.exhausted) {
    throw BudgetExceeded("exact solver ran over budget for " + source);
  }
  return {sol.value, sol.witness, std::nullopt, std::move(source)};
}

ClosedFormResult Formula(const Graph& g, int value, VertexSet witness,
                         std::string source) {
  if (witness.size() != value) {
    throw WitnessConstructionError(source + ": witness size " +
                                   std::to_string(witness.size()) +
                                   " differs from formula value " +
                                   std::to_string(value));
  }
  RequireInSDS(g, witness, source);
  return {value, std::move(witness), std::nullopt, std::move(source)};
}

// Grid membership view used by the corner repair. A vertex is defective
// when nothing covers it, or when it lies outside S and every neighbor v in
// S leaves some vertex of N[v] uncovered after moving to it. Defects depend
// only on S within distance 3.
class GridState {
 public:
  GridState(int m, int k) : m_(m), k_(k), in_(static_cast<size_t>(m * k), 0) {}

  int id(int r, int c) const { return r * k_ + c; }
  bool valid(int r, int c) const { return r >= 0 && r < m_ && c >= 0 && c < k_; }
  bool in(int v) const { return in_[static_cast<size_t>(v)] != 0; }
  void set(int v, bool value) { in_[static_cast<size_t>(v)] = value ? 1 : 0; }

  template <typename F>
  void ForNeighbors(int v, F&& f) const {
    const int r = v / k_;
    const int c = v % k_;
    static constexpr std::array<std::pair<int, int>, 4> kSteps = {
        {{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
    for (const auto& [dr, dc] : kSteps) {
      if (valid(r + dr, c + dc)) f(id(r + dr, c + dc));
    }
  }

  int Coverage(int z) const {
    int total = in(z) ? 1 : 0;
    ForNeighbors(z, [&](int w) { total += in(w) ? 1 : 0; });
    return total;
  }

  bool Adjacent(int u, int v) const {
    return std::abs(u / k_ - v / k_) + std::abs(u % k_ - v % k_) == 1;
  }

  bool Defective(int u) const {
    if (Coverage(u) == 0) return true;
    if (in(u)) return false;
    bool defended = false;
    ForNeighbors(u, [&](int v) {
      if (defended || !in(v)) return;
      bool ok = true;
      auto check = [&](int z) {
        if (z != u && !Adjacent(z, u) && Coverage(z) == 1) ok = false;
      };
      check(v);
      ForNeighbors(v, check);
      defended = ok;
    });
    return !defended;
  }

  bool ConflictFree(int v) const {
    bool ok = true;
    ForNeighbors(v, [&](int w) { ok = ok && !in(w); });
    return ok;
  }

  std::vector<int> DefectsInBox(int r0, int r1, int c0, int c1) const {
    std::vector<int> out;
    for (int r = std::max(r0, 0); r <= std::min(r1, m_ - 1); ++r) {
      for (int c = std::max(c0, 0); c <= std::min(c1, k_ - 1); ++c) {
        if (Defective(id(r, c))) out.push_back(id(r, c));
      }
    }
    return out;
  }

  int size() const {
    return static_cast<int>(std::count(in_.begin(), in_.end(), 1));
  }

  VertexSet ToVertexSet() const {
    VertexSet out(m_ * k_);
    for (int v = 0; v < m_ * k_; ++v) {
      if (in(v)) out.insert(v);
    }
    return out;
  }

 private:
  int m_;
  int k_;
  std::vector<char> in_;
};

struct Corner {
  int r;
  int c;
};

// Repairs the defects nearest to corner `which` by modifying S inside the
// corner's 4x4 block. Returns false if no modification works.
bool RepairCorner(GridState& state, int m, int k, const std::vector<Corner>& corners,
                  size_t which, std::vector<int>& defects) {
  const Corner corner = corners[which];
  auto nearest = [&](int u) {
    const int r = u / k;
    const int c = u % k;
    size_t best = 0;
    int best_dist = m + k;
    for (size_t i = 0; i < corners.size(); ++i) {
      const int d = std::abs(r - corners[i].r) + std::abs(c - corners[i].c);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    return best;
  };
  if (std::none_of(defects.begin(), defects.end(),
                   [&](int u) { return nearest(u) == which; })) {
    return true;
  }

  const int r0 = corner.r == 0 ? 0 : std::max(0, corner.r - 3);
  const int r1 = corner.r == 0 ? std::min(m - 1, 3) : corner.r;
  const int c0 = corner.c == 0 ? 0 : std::max(0, corner.c - 3);
  const int c1 = corner.c == 0 ? std::min(k - 1, 3) : corner.c;
  std::vector<int> members;
  std::vector<int> outsiders;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      (state.in(state.id(r, c)) ? members : outsiders).push_back(state.id(r, c));
    }
  }

  // (net growth, total changes, removals, additions) in ascending order.
  using Candidate = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::vector<Candidate> candidates;
  std::vector<std::vector<int>> removals{{}};
  for (size_t i = 0; i < members.size(); ++i) {
    removals.push_back({members[i]});
    for (size_t j = i + 1; j < members.size(); ++j) {
      removals.push_back({members[i], members[j]});
    }
  }
  std::vector<std::vector<int>> additions{{}};
  std::vector<int> pick;
  auto grow = [&](auto&& self, size_t start) -> void {
    if (pick.size() == 4) return;
    for (size_t i = start; i < outsiders.size(); ++i) {
      pick.push_back(outsiders[i]);
      additions.push_back(pick);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  grow(grow, 0);
  for (const auto& rem : removals) {
    for (const auto& add : additions) {
      if (rem.empty() && add.empty()) continue;
      const int net = static_cast<int>(add.size()) - static_cast<int>(rem.size());
      candidates.emplace_back(net, static_cast<int>(add.size() + rem.size()),
                              rem, add);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end());

  const std::vector<int> before =
      state.DefectsInBox(r0 - 3, r1 + 3, c0 - 3, c1 + 3);
  for (const auto& [net, total, rem, add] : candidates) {
    for (int v : rem) state.set(v, false);
    bool independent = true;
    for (int v : add) {
      if (!state.ConflictFree(v)) independent = false;
      state.set(v, true);
    }
    if (independent) {
      const std::vector<int> after =
          state.DefectsInBox(r0 - 3, r1 + 3, c0 - 3, c1 + 3);
      const bool no_new = std::all_of(after.begin(), after.end(), [&](int u) {
        return std::find(before.begin(), before.end(), u) != before.end() &&
               nearest(u) != which;
      });
      if (no_new) {
        std::vector<int> kept;
        for (int u : defects) {
          if (std::find(before.begin(), before.end(), u) == before.end() ||
              std::find(after.begin(), after.end(), u) != after.end()) {
            kept.push_back(u);
          }
        }
        defects = std::move(kept);
        return true;
      }
    }
    for (int v : add) state.set(v, false);
    for (int v : rem) state.set(v, true);
  }
  return false;
}

std::optional<GridWitnessResult> TryResidue(int m, int k, int residue) {
  GridState state(m, k);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < k; ++c) {
      if ((r + c) % 3 == residue) state.set(state.id(r, c), true);
    }
  }
  const int base_size = state.size();
  std::vector<int> defects = state.DefectsInBox(0, m - 1, 0, k - 1);
  const std::vector<Corner> corners = {
      {0, 0}, {0, k - 1}, {m - 1, 0}, {m - 1, k - 1}};
  for (size_t i = 0; i < corners.size() && !defects.empty(); ++i) {
    if (!RepairCorner(state, m, k, corners, i, defects)) return std::nullopt;
  }
  if (!defects.empty() || state.size() > GridUpperBound(m, k)) {
    return std::nullopt;
  }
  return GridWitnessResult{state.ToVertexSet(), base_size, residue};
}

}  // namespace

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

VertexSet PathWitness(int n) {
  if (n < 4) {
    throw std::invalid_argument("path witness needs n >= 4, got " +
                                std::to_string(n));
  }
  VertexSet out(n);
  const int blocks = n / 7;
  const int tail = n % 7;
  // 1-based v_{7i+2}, v_{7i+4}, v_{7i+6} are 0-based 7i+1, 7i+3, 7i+5.
  for (int i = 0; i < blocks; ++i) {
    for (int offset : {1, 3, 5}) out.insert(7 * i + offset);
  }
  // Tail: v_{7m+1}, v_{7m+3}, v_{7m+5} for r in {1,2}, {3,4}, {5,6}.
  const int extra = (tail + 1) / 2;
  for (int j = 0; j < extra; ++j) out.insert(7 * blocks + 2 * j);
  return out;
}

int GridUpperBound(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("grid sides must be >= 1");
  return CeilDiv(m * k, 3) + 4;
}

GridWitnessResult GridWitnessDetailed(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("grid sides must be >= 1");
  if (static_cast<long long>(m) * k > kMaxGridOrder) {
    throw std::invalid_argument("grid witness supports at most " +
                                std::to_string(kMaxGridOrder) + " vertices");
  }
  const Graph grid = Generate(FamilySpec::Grid(m, k));
  for (int residue : {0, 1, 2}) {
    std::optional<GridWitnessResult> attempt = TryResidue(m, k, residue);
    if (!attempt) continue;
    if (!VerifySet(grid, attempt->witness, Variant::kInSDom).holds) continue;
    return *attempt;
  }
  throw WitnessConstructionError("corner repair found no verified set for the " +
                                 std::to_string(m) + "x" + std::to_string(k) +
                                 " grid within the size bound");
}

VertexSet GridWitness(int m, int k) { return GridWitnessDetailed(m, k).witness; }

ClosedFormResult ClosedForm(const FamilySpec& spec, const SearchBudget& budget) {
  const Graph g = Generate(spec);
  const int n = spec.a;
  switch (spec.kind) {
    case Family::kComplete:
      return Formula(g, 1, VertexSet(n, {0}), "complete graph: 1");
    case Family::kCompleteBipartite:
    case Family::kStar: {
      const int p = spec.kind == Family::kStar ? 1 : spec.a;
      const int q = spec.kind == Family::kStar ? spec.a : spec.b;
      VertexSet side(p + q);
      if (p == 1) {
        for (int v = 1; v <= q; ++v) side.insert(v);
        return Formula(g, q, side, "complete bipartite, p = 1: q");
      }
      for (int v = 0; v < p; ++v) side.insert(v);
      return Formula(g, p, side, "complete bipartite, p >= 2: p");
    }
    case Family::kPath:
      if (n < 4) return FromSolver(g, budget, "path n < 4: exact solver");
      return Formula(g, CeilDiv(3 * n, 7), PathWitness(n),
                     "path formula ceil(3n/7)");
    case Family::kCycle:
      if (n == 3 || n == 5) {
        return FromSolver(g, budget, "cycle n in {3, 5}: exact solver");
      }
      return Formula(g, CeilDiv(3 * n, 7), PathWitness(n),
                     "cycle formula ceil(3n/7)");
    case Family::kWheel: {
      // W_3 = K_4 is complete; W_5 is the excluded six-vertex wheel.
      if (n == 3 || n == 5) {
        return FromSolver(g, budget, "wheel n in {3, 5}: exact solver");
      }
      VertexSet rim = PathWitness(n);
      VertexSet witness(n + 1);
      rim.for_each([&](int v) { witness.insert(v); });
      return Formula(g, CeilDiv(3 * n, 7), witness,
                     "wheel formula ceil(3n/7) via apex join");
    }
    case Family::kGrid: {
      const int m = spec.a;
      const int k = spec.b;
      ClosedFormResult out;
      if (m * k <= kExactGridOrder) {
        out = FromSolver(g, budget, "grid: exact solver");
      } else {
        out.source = "grid: upper bound ceil(mk/3) + 4 only";
      }
      out.upper_bound = GridUpperBound(m, k);
      return out;
    }
    case Family::kApexJoin: {
      const Graph& base = *spec.base;
      const bool complete =
          2 * base.num_edges() == base.order() * (base.order() - 1);
      if (complete) {
        return Formula(g, 1, VertexSet(g.order(), {0}),
                       "apex join of a complete graph: 1");
      }
      const Solution inner = Solve(base, Variant::kInSDom, budget);
      if (!inner.exhausted) {
        throw BudgetExceeded("exact solver ran over budget on the joined graph");
      }
      if (!inner.value) {
        return {std::nullopt, std::nullopt, std::nullopt,
                "apex join: equals the joined graph (none exists)"};
      }
      VertexSet witness(g.order());
      inner.witness->for_each([&](int v) { witness.insert(v); });
      return Formula(g, *inner.value, witness,
                     "apex join: equals the joined graph");
    }
  }
  throw std::invalid_argument("unsupported family");
}

}  // namespace secdom
