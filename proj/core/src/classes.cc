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

#include "secdom/classes.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "secdom/verify.h"

namespace secdom {

namespace {

bool IsClique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    VertexSet others = s;
    others.erase(v);
    ok = ok && others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

bool HasEdge(const Graph& g, const VertexSet& alive) {
  for (int v = alive.first(); v != -1; v = alive.next(v)) {
    if (g.neighbors(v).intersects(alive)) return true;
  }
  return false;
}

// Lexicographically first bisimplicial edge of g[alive], or (-1, -1).
Edge FirstBisimplicial(const Graph& g, const VertexSet& alive) {
  for (int u = alive.first(); u != -1; u = alive.next(u)) {
    const VertexSet nu = g.neighbors(u) & alive;
    for (int v = nu.next(u); v != -1; v = nu.next(v)) {
      if (IsBisimplicial(g, alive, u, v)) return {u, v};
    }
  }
  return {-1, -1};
}

EliminationOrdering BuildOrdering(int n, const std::vector<Edge>& edges) {
  EliminationOrdering out;
  VertexSet gone(n);
  for (const Edge& e : edges) {
    gone.insert(e.first);
    gone.insert(e.second);
    out.edges.push_back(e);
    out.eliminated.push_back(gone);
  }
  return out;
}

class PebSearch {
 public:
  explicit PebSearch(const Graph& g) : g_(g) {}

  bool Run(std::vector<Edge>& path) {
    return Visit(g_.vertices(), path);
  }

 private:
  static uint32_t Key(const VertexSet& alive) {
    return alive.words().empty() ? 0U : static_cast<uint32_t>(alive.words()[0]);
  }

  bool Visit(const VertexSet& alive, std::vector<Edge>& path) {
    if (!HasEdge(g_, alive)) return true;
    if (failed_.contains(Key(alive))) return false;
    for (int u = alive.first(); u != -1; u = alive.next(u)) {
      const VertexSet nu = g_.neighbors(u) & alive;
      for (int v = nu.next(u); v != -1; v = nu.next(v)) {
        if (!IsBisimplicial(g_, alive, u, v)) continue;
        VertexSet rest = alive;
        rest.erase(u);
        rest.erase(v);
        path.emplace_back(u, v);
        if (Visit(rest, path)) return true;
        path.pop_back();
      }
    }
    failed_.insert(Key(alive));
    return false;
  }

  const Graph& g_;
  std::unordered_set<uint32_t> failed_;
};

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> Bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      const int cv = color[static_cast<size_t>(v)];
      bool odd = false;
      g.neighbors(v).for_each([&](int w) {
        int& cw = color[static_cast<size_t>(w)];
        if (cw == -1) {
          cw = 1 - cv;
          frontier.push(w);
        } else if (cw == cv) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  VertexSet x(n);
  VertexSet y(n);
  for (int v = 0; v < n; ++v) {
    (color[static_cast<size_t>(v)] == 0 ? x : y).insert(v);
  }
  return std::make_pair(x, y);
}

bool IsSplitPartition(const Graph& g, const SplitPartition& p) {
  if (p.clique.universe() != g.order() || p.independent.universe() != g.order()) {
    return false;
  }
  if (p.clique.intersects(p.independent)) return false;
  if ((p.clique | p.independent).size() != g.order()) return false;
  return IsClique(g, p.clique) && IsIndependent(g, p.independent);
}

std::optional<SplitPartition> FindSplitPartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> by_degree(static_cast<size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.degree(by_degree[static_cast<size_t>(i - 1)]) >= i - 1) m = i;
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < n; ++i) {
    (i < m ? head : tail) += g.degree(by_degree[static_cast<size_t>(i)]);
  }
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

  SplitPartition out{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) {
    (i < m ? out.clique : out.independent).insert(by_degree[static_cast<size_t>(i)]);
  }
  if (!IsSplitPartition(g, out)) {
    throw std::logic_error("degree-sequence split partition failed to verify");
  }
  return out;
}

bool IsThresholdCertificate(const Graph& g, const ThresholdCertificate& cert) {
  if (!IsSplitPartition(g, cert.partition)) return false;
  auto covers = [](const std::vector<int>& order, const VertexSet& side) {
    VertexSet seen(side.universe());
    for (int v : order) {
      if (!side.contains(v) || seen.contains(v)) return false;
      seen.insert(v);
    }
    return seen == side;
  };
  if (!covers(cert.clique_order, cert.partition.clique) ||
      !covers(cert.independent_order, cert.partition.independent)) {
    return false;
  }
  for (size_t i = 1; i < cert.clique_order.size(); ++i) {
    if (!g.closed_neighborhood(cert.clique_order[i - 1])
             .is_subset_of(g.closed_neighborhood(cert.clique_order[i]))) {
      return false;
    }
  }
  for (size_t i = 1; i < cert.independent_order.size(); ++i) {
    if (!g.neighbors(cert.independent_order[i])
             .is_subset_of(g.neighbors(cert.independent_order[i - 1]))) {
      return false;
    }
  }
  return true;
}

std::optional<ThresholdCertificate> RecognizeThreshold(const Graph& g) {
  const int n = g.order();
  std::vector<int> by_degree(static_cast<size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });

  // Removing an isolated vertex leaves other degrees unchanged; removing a
  // universal one lowers every remaining degree by one.
  std::vector<int> universal_peel;
  std::vector<int> isolated_peel;
  int lo = 0;
  int hi = n - 1;
  while (lo <= hi) {
    const int remaining = hi - lo + 1;
    const int removed_universal = static_cast<int>(universal_peel.size());
    const int low = by_degree[static_cast<size_t>(lo)];
    const int high = by_degree[static_cast<size_t>(hi)];
    if (remaining == 1 && isolated_peel.empty()) {
      universal_peel.push_back(low);
      ++lo;
    } else if (g.degree(low) - removed_universal == 0) {
      isolated_peel.push_back(low);
      ++lo;
    } else if (g.degree(high) - removed_universal == remaining - 1) {
      universal_peel.push_back(high);
      --hi;
    } else {
      return std::nullopt;
    }
  }

  ThresholdCertificate cert{{VertexSet(n), VertexSet(n)},
                            {universal_peel.rbegin(), universal_peel.rend()},
                            {isolated_peel.rbegin(), isolated_peel.rend()}};
  for (int v : universal_peel) cert.partition.clique.insert(v);
  for (int v : isolated_peel) cert.partition.independent.insert(v);
  if (!IsThresholdCertificate(g, cert)) {
    throw std::logic_error("threshold peeling produced an invalid certificate");
  }
  return cert;
}

VertexSet ThresholdInSDS(const Graph& g) {
  if (g.order() == 0) {
    throw std::invalid_argument("threshold algorithm needs at least one vertex");
  }
  if (!g.IsConnected()) {
    throw std::invalid_argument("threshold algorithm needs a connected graph");
  }
  const std::optional<ThresholdCertificate> cert = RecognizeThreshold(g);
  if (!cert) throw std::invalid_argument("graph is not a threshold graph");

  const VertexSet& clique = cert->partition.clique;
  const VertexSet& independent = cert->partition.independent;
  VertexSet out = independent;
  for (int c = clique.first(); c != -1; c = clique.next(c)) {
    if (!g.neighbors(c).intersects(independent)) {
      out.insert(c);
      break;
    }
  }
  if (!VerifySet(g, out, Variant::kInSDom).holds) {
    throw std::logic_error("threshold construction " + out.ToString() +
                           " failed verification");
  }
  return out;
}

bool IsBisimplicial(const Graph& g, const VertexSet& alive, int u, int v) {
  if (!alive.contains(u) || !alive.contains(v) || !g.adjacent(u, v)) {
    return false;
  }
  const VertexSet nu = g.neighbors(u) & alive;
  const VertexSet nv = g.neighbors(v) & alive;
  for (int a = nv.first(); a != -1; a = nv.next(a)) {
    for (int b = nu.first(); b != -1; b = nu.next(b)) {
      if (a != b && !g.adjacent(a, b)) return false;
    }
  }
  return true;
}

std::string CheckEliminationOrdering(const Graph& g,
                                     const EliminationOrdering& ordering) {
  if (ordering.eliminated.size() != ordering.edges.size()) {
    return "edge and elimination sequences differ in length";
  }
  VertexSet alive = g.vertices();
  VertexSet gone = g.empty_set();
  for (size_t i = 0; i < ordering.edges.size(); ++i) {
    const auto [u, v] = ordering.edges[i];
    const std::string where = "edge " + std::to_string(i + 1) + " (" +
                              std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
      return where + " has an endpoint outside the graph";
    }
    if (gone.contains(u) || gone.contains(v)) {
      return where + " shares an endpoint with an earlier edge";
    }
    if (!IsBisimplicial(g, alive, u, v)) {
      return where + " is not bisimplicial in the remaining graph";
    }
    gone.insert(u);
    gone.insert(v);
    alive.erase(u);
    alive.erase(v);
    if (!(ordering.eliminated[i] == gone)) {
      return where + ": eliminated set does not match the endpoints so far";
    }
  }
  if (HasEdge(g, alive)) return "edges remain after the last elimination";
  return "";
}

PebResult PerfectEdgeElimination(const Graph& g) {
  if (!Bipartition(g)) return {PebStatus::kAbsent, std::nullopt};

  std::vector<Edge> greedy;
  VertexSet alive = g.vertices();
  while (HasEdge(g, alive)) {
    const Edge e = FirstBisimplicial(g, alive);
    if (e.first == -1) break;
    greedy.push_back(e);
    alive.erase(e.first);
    alive.erase(e.second);
  }

  std::optional<std::vector<Edge>> found;
  if (!HasEdge(g, alive)) {
    found = std::move(greedy);
  } else if (g.order() <= kPebExhaustiveLimit) {
    std::vector<Edge> path;
    if (PebSearch(g).Run(path)) found = std::move(path);
    if (!found) return {PebStatus::kAbsent, std::nullopt};
  } else {
    return {PebStatus::kUnresolved, std::nullopt};
  }

  EliminationOrdering ordering = BuildOrdering(g.order(), *found);
  const std::string problem = CheckEliminationOrdering(g, ordering);
  if (!problem.empty()) {
    throw std::logic_error("elimination search produced an invalid ordering: " +
                           problem);
  }
  return {PebStatus::kPresent, std::move(ordering)};
}

}  // namespace secdom
