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

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

namespace secdom {

namespace {

using Mask = uint64_t;
using Clock = std::chrono::steady_clock;

int Count(Mask m) { return std::popcount(m); }
Mask Bit(int v) { return Mask{1} << v; }

VertexSet ToVertexSet(Mask m, int n) {
  VertexSet out(n);
  while (m != 0) {
    out.insert(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

void CheckOrder(const Graph& g, const SearchBudget& budget) {
  budget.Validate();
  if (g.order() > budget.max_n) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " exceeds solver cap max_n = " +
                                std::to_string(budget.max_n));
  }
  if (g.order() > kSolverOrderLimit) {
    throw std::invalid_argument("exact solver supports at most " +
                                std::to_string(kSolverOrderLimit) +
                                " vertices");
  }
}

int LowerBound(const Graph& g) {
  const int n = g.order();
  const int per_vertex = g.max_degree() + 1;
  return std::max((n + per_vertex - 1) / per_vertex, 1);
}

// Depth-first feasibility search over word-packed vertex sets.
class Searcher {
 public:
  Searcher(const Graph& g, Variant variant, const SearchBudget& budget)
      : n_(g.order()),
        variant_(variant),
        budget_(budget),
        all_(n_ == 64 ? ~Mask{0} : Bit(n_) - 1),
        open_(static_cast<size_t>(n_)),
        closed_(static_cast<size_t>(n_)),
        ball3_(static_cast<size_t>(n_)),
        deadline_(Clock::now() + budget.time_limit) {
    for (int v = 0; v < n_; ++v) {
      g.neighbors(v).for_each([&](int w) { open_[Idx(v)] |= Bit(w); });
      closed_[Idx(v)] = open_[Idx(v)] | Bit(v);
    }
    for (int v = 0; v < n_; ++v) {
      Mask ball = closed_[Idx(v)];
      for (int step = 0; step < 2; ++step) {
        Mask grown = ball;
        ForEach(ball, [&](int w) { grown |= closed_[Idx(w)]; });
        ball = grown;
      }
      ball3_[Idx(v)] = ball;
    }
  }

  // Some feasible S with include <= S, S disjoint from exclude and
  // |S| <= k, if one exists.
  std::optional<Mask> Find(Mask include, Mask exclude, int k) {
    cap_bound_ = false;
    if ((include & exclude) != 0 || Count(include) > k) {
      cap_bound_ = Count(include) > k;
      return std::nullopt;
    }
    Mask found = 0;
    if (variant_ == Variant::kIDom) {
      // Fix the isolated member first, then solve plain domination.
      Mask isolates = (all_ & ~exclude);
      for (int v = 0; v < n_; ++v) {
        if ((isolates & Bit(v)) == 0 || (open_[Idx(v)] & include) != 0) {
          continue;
        }
        if (Dfs(include | Bit(v), exclude | open_[Idx(v)], k, &found)) {
          return found;
        }
        if (aborted_) return std::nullopt;
      }
      return std::nullopt;
    }
    if (RequiresIndependence(variant_) && !Independent(include)) {
      return std::nullopt;
    }
    if (Dfs(include, exclude, k, &found)) return found;
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }
  // Whether the last Find cut some branch only because |S| reached k.
  bool cap_bound() const { return cap_bound_; }
  long long explored() const { return explored_; }

 private:
  static size_t Idx(int v) { return static_cast<size_t>(v); }

  template <typename F>
  static void ForEach(Mask m, F&& f) {
    while (m != 0) {
      f(std::countr_zero(m));
      m &= m - 1;
    }
  }

  bool Independent(Mask s) const {
    bool ok = true;
    ForEach(s, [&](int v) { ok = ok && (open_[Idx(v)] & s) == 0; });
    return ok;
  }

  bool Tick() {
    ++explored_;
    if (explored_ > budget_.max_candidates) {
      aborted_ = true;
    } else if ((explored_ & 0xFFF) == 0 && Clock::now() > deadline_) {
      aborted_ = true;
    }
    return !aborted_;
  }

  // Vertices outside S whose swap test fails for every neighbor in S.
  // Requires S dominating.
  Mask Undefended(Mask s) const {
    Mask once = 0;
    Mask twice = 0;
    ForEach(s, [&](int v) {
      twice |= once & closed_[Idx(v)];
      once |= closed_[Idx(v)];
    });
    const Mask single = once & ~twice;
    Mask bad = 0;
    ForEach(all_ & ~s, [&](int u) {
      bool defended = false;
      ForEach(open_[Idx(u)] & s, [&](int v) {
        // Vertices left uncovered when v moves to u.
        defended =
            defended || (closed_[Idx(v)] & single & ~closed_[Idx(u)]) == 0;
      });
      if (!defended) bad |= Bit(u);
    });
    return bad;
  }

  bool Dfs(Mask s, Mask exclude, int k, Mask* out) {
    if (!Tick()) return false;
    const int size = Count(s);
    if (size > k) {
      cap_bound_ = true;
      return false;
    }
    Mask dominated = s;
    Mask neighborhood = 0;
    ForEach(s, [&](int v) { neighborhood |= open_[Idx(v)]; });
    dominated |= neighborhood;
    Mask allowed = all_ & ~s & ~exclude;
    if (RequiresIndependence(variant_)) allowed &= ~neighborhood;

    const Mask undominated = all_ & ~dominated;
    Mask branch_on = 0;
    if (undominated != 0) {
      if (size >= k) {
        cap_bound_ = true;
        return false;
      }
      int best = n_ + 1;
      int max_cover = 0;
      ForEach(allowed, [&](int c) {
        max_cover = std::max(max_cover, Count(closed_[Idx(c)] & undominated));
      });
      if (max_cover == 0) return false;
      if (static_cast<long long>(k - size) * max_cover < Count(undominated)) {
        cap_bound_ = true;
        return false;
      }
      ForEach(undominated, [&](int w) {
        const int options = Count(closed_[Idx(w)] & allowed);
        if (options < best) {
          best = options;
          branch_on = closed_[Idx(w)] & allowed;
        }
      });
      if (best == 0) return false;
    } else {
      if (!RequiresSecurity(variant_)) {
        *out = s;
        return true;
      }
      const Mask bad = Undefended(s);
      if (bad == 0) {
        *out = s;
        return true;
      }
      if (size >= k) {
        cap_bound_ = true;
        return false;
      }
      int best = n_ + 1;
      ForEach(bad, [&](int u) {
        const int options = Count(ball3_[Idx(u)] & allowed);
        if (options < best) {
          best = options;
          branch_on = ball3_[Idx(u)] & allowed;
        }
      });
      if (best == 0) return false;
    }

    // Branch i takes the i-th candidate and excludes the earlier ones.
    Mask tried = 0;
    bool hit = false;
    ForEach(branch_on, [&](int c) {
      if (hit || aborted_) return;
      hit = Dfs(s | Bit(c), exclude | tried, k, out);
      tried |= Bit(c);
    });
    return hit;
  }

  int n_;
  Variant variant_;
  SearchBudget budget_;
  Mask all_;
  std::vector<Mask> open_;
  std::vector<Mask> closed_;
  std::vector<Mask> ball3_;
  Clock::time_point deadline_;
  long long explored_ = 0;
  bool aborted_ = false;
  bool cap_bound_ = false;
};

Solution SolvePruned(const Graph& g, Variant variant,
                     const SearchBudget& budget) {
  const int n = g.order();
  Solution sol{variant, std::nullopt, std::nullopt, 0, false};
  Searcher search(g, variant, budget);

  // Isolated vertices of g belong to every dominating set.
  Mask forced = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) forced |= Bit(v);
  }

  std::optional<int> best;
  for (int k = std::max(LowerBound(g), Count(forced)); k <= n; ++k) {
    const std::optional<Mask> hit = search.Find(forced, 0, k);
    if (search.aborted()) {
      sol.explored = search.explored();
      return sol;
    }
    if (hit) {
      best = k;
      break;
    }
    // Nothing was cut by the size cap, so larger k cannot help.
    if (!search.cap_bound()) break;
  }
  if (!best) {
    sol.explored = search.explored();
    sol.exhausted = true;
    return sol;
  }

  // Lexicographically smallest set of size *best: decide members in order.
  Mask include = forced;
  Mask exclude = 0;
  for (int v = 0; v < n && Count(include) < *best; ++v) {
    if ((include & Bit(v)) != 0) continue;
    if (search.Find(include | Bit(v), exclude, *best)) {
      include |= Bit(v);
    } else {
      if (search.aborted()) {
        sol.explored = search.explored();
        return sol;
      }
      exclude |= Bit(v);
    }
  }
  sol.value = best;
  sol.witness = ToVertexSet(include, n);
  sol.explored = search.explored();
  sol.exhausted = true;
  assert(Count(include) == *best);
  return sol;
}

// Visits the k-subsets of {0..n-1} in lexicographic order until `visit`
// returns true. Returns false if the budget ran out.
template <typename Visit>
bool EnumerateSubsets(int n, int k, long long& explored, long long limit,
                      Visit&& visit, bool& stop) {
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    if (++explored > limit) return false;
    VertexSet s(n);
    for (int v : pick) s.insert(v);
    if (visit(s)) {
      stop = true;
      return true;
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

Solution SolveUnpruned(const Graph& g, Variant variant,
                       const SearchBudget& budget) {
  const int n = g.order();
  Solution sol{variant, std::nullopt, std::nullopt, 0, false};
  const auto deadline = Clock::now() + budget.time_limit;
  for (int k = 1; k <= n; ++k) {
    bool stop = false;
    const bool completed = EnumerateSubsets(
        n, k, sol.explored, budget.max_candidates,
        [&](const VertexSet& s) {
          if (VerifySet(g, s, variant).holds) {
            sol.value = k;
            sol.witness = s;
            return true;
          }
          return false;
        },
        stop);
    if (!completed || Clock::now() > deadline) {
      sol.value.reset();
      sol.witness.reset();
      return sol;
    }
    if (stop) break;
  }
  sol.exhausted = true;
  return sol;
}

}  // namespace

void SearchBudget::Validate() const {
  if (max_n <= 0 || max_candidates <= 0 || time_limit.count() <= 0) {
    throw std::invalid_argument("search budget caps must be positive");
  }
}

Solution Solve(const Graph& g, Variant variant, const SearchBudget& budget,
               const SearchOptions& options) {
  CheckOrder(g, budget);
  if (g.order() == 0) {
    return {variant, 0, VertexSet(0), 0, true};
  }
  return options.prune ? SolvePruned(g, variant, budget)
                       : SolveUnpruned(g, variant, budget);
}

DecisionResult SolveDecision(const Graph& g, Variant variant, int k,
                             const SearchBudget& budget) {
  CheckOrder(g, budget);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (g.order() == 0) return {Decision::kYes, VertexSet(0), 0};
  Searcher search(g, variant, budget);
  const std::optional<Mask> hit = search.Find(0, 0, std::min(k, g.order()));
  DecisionResult result;
  result.explored = search.explored();
  if (search.aborted()) {
    result.answer = Decision::kUnknown;
  } else if (hit) {
    result.answer = Decision::kYes;
    result.witness = ToVertexSet(*hit, g.order());
  } else {
    result.answer = Decision::kNo;
  }
  return result;
}

std::vector<VertexSet> AllMinimumSets(const Graph& g, Variant variant,
                                      const SearchBudget& budget) {
  CheckOrder(g, budget);
  if (g.order() > 16) {
    throw std::invalid_argument("AllMinimumSets supports at most 16 vertices");
  }
  const Solution best = Solve(g, variant, budget);
  if (!best.exhausted) throw BudgetExceeded("minimum search ran over budget");
  if (!best.value) return {};
  std::vector<VertexSet> out;
  long long explored = 0;
  bool stop = false;
  const bool completed = EnumerateSubsets(
      g.order(), *best.value, explored, budget.max_candidates,
      [&](const VertexSet& s) {
        if (VerifySet(g, s, variant).holds) out.push_back(s);
        return false;
      },
      stop);
  if (!completed) throw BudgetExceeded("enumeration ran over budget");
  return out;
}

}  // namespace secdom
