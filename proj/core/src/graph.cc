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

#include "secdom/graph.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace secdom {

namespace {

std::string PairText(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

int RequireAtLeast(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + " must be >= " +
                                std::to_string(minimum) + ", got " +
                                std::to_string(value));
  }
  return value;
}

}  // namespace

Graph Graph::FromEdges(int n, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " +
                                std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), VertexSet(n));
  for (const Edge& e : edges) {
    const auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge " + PairText(e) +
                                  " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop " + PairText(e));
    if (!g.adj_[static_cast<size_t>(u)].contains(v)) {
      g.adj_[static_cast<size_t>(u)].insert(v);
      g.adj_[static_cast<size_t>(v)].insert(u);
      ++g.num_edges_;
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

size_t Graph::Index(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside graph of order " + std::to_string(n_));
  }
  return static_cast<size_t>(v);
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet out = adj_[Index(v)];
  out.insert(v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const VertexSet& a : adj_) best = std::max(best, a.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges_));
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[static_cast<size_t>(u)].next(u); v != -1;
         v = adj_[static_cast<size_t>(u)].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n_));
  for (const VertexSet& a : adj_) out.push_back(a.size());
  return out;
}

const std::string& Graph::label(int v) const {
  static const std::string kEmpty;
  Index(v);
  return labels_.empty() ? kEmpty : labels_[static_cast<size_t>(v)];
}

Graph Graph::WithLabels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool Graph::IsConnected() const {
  if (n_ <= 1) return true;
  VertexSet seen(n_);
  std::queue<int> frontier;
  seen.insert(0);
  frontier.push(0);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    adj_[static_cast<size_t>(u)].for_each([&](int w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        frontier.push(w);
      }
    });
  }
  return seen.size() == n_;
}

bool Graph::SameAdjacency(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

FamilySpec FamilySpec::Path(int n) {
  return {Family::kPath, RequireAtLeast(n, 1, "path order"), 0, nullptr};
}

FamilySpec FamilySpec::Cycle(int n) {
  return {Family::kCycle, RequireAtLeast(n, 3, "cycle order"), 0, nullptr};
}

FamilySpec FamilySpec::Complete(int n) {
  return {Family::kComplete, RequireAtLeast(n, 1, "complete graph order"), 0,
          nullptr};
}

FamilySpec FamilySpec::CompleteBipartite(int p, int q) {
  RequireAtLeast(p, 1, "part size p");
  RequireAtLeast(q, 1, "part size q");
  return {Family::kCompleteBipartite, std::min(p, q), std::max(p, q), nullptr};
}

FamilySpec FamilySpec::Star(int q) {
  return {Family::kStar, RequireAtLeast(q, 1, "star leaf count"), 0, nullptr};
}

FamilySpec FamilySpec::Wheel(int n) {
  return {Family::kWheel, RequireAtLeast(n, 3, "wheel rim length"), 0,
          nullptr};
}

FamilySpec FamilySpec::Grid(int m, int k) {
  RequireAtLeast(m, 1, "grid rows");
  RequireAtLeast(k, 1, "grid columns");
  return {Family::kGrid, m, k, nullptr};
}

FamilySpec FamilySpec::ApexJoin(Graph g) {
  return {Family::kApexJoin, g.order(), 0,
          std::make_shared<const Graph>(std::move(g))};
}

std::string FamilySpec::ToString() const {
  switch (kind) {
    case Family::kPath:
      return "path " + std::to_string(a);
    case Family::kCycle:
      return "cycle " + std::to_string(a);
    case Family::kComplete:
      return "complete " + std::to_string(a);
    case Family::kCompleteBipartite:
      return "kbip " + std::to_string(a) + " " + std::to_string(b);
    case Family::kStar:
      return "star " + std::to_string(a);
    case Family::kWheel:
      return "wheel " + std::to_string(a);
    case Family::kGrid:
      return "grid " + std::to_string(a) + " " + std::to_string(b);
    case Family::kApexJoin:
      return "apex-join of a " + std::to_string(a) + "-vertex graph";
  }
  return "unknown";
}

FamilySpec ParseFamilySpec(std::span<const std::string> tokens) {
  if (tokens.empty()) throw std::invalid_argument("missing family name");
  const std::string& name = tokens[0];
  auto param = [&](size_t i) {
    if (i >= tokens.size()) {
      throw std::invalid_argument("family '" + name + "' needs " +
                                  std::to_string(i) + " parameter(s)");
    }
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tokens[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tokens[i].size()) {
      throw std::invalid_argument("bad family parameter '" + tokens[i] + "'");
    }
    return value;
  };
  auto arity = [&](size_t expected) {
    if (tokens.size() != expected + 1) {
      throw std::invalid_argument("family '" + name + "' takes " +
                                  std::to_string(expected) + " parameter(s)");
    }
  };
  if (name == "path") {
    arity(1);
    return FamilySpec::Path(param(1));
  }
  if (name == "cycle") {
    arity(1);
    return FamilySpec::Cycle(param(1));
  }
  if (name == "complete") {
    arity(1);
    return FamilySpec::Complete(param(1));
  }
  if (name == "kbip" || name == "complete-bipartite") {
    arity(2);
    return FamilySpec::CompleteBipartite(param(1), param(2));
  }
  if (name == "star") {
    arity(1);
    return FamilySpec::Star(param(1));
  }
  if (name == "wheel") {
    arity(1);
    return FamilySpec::Wheel(param(1));
  }
  if (name == "grid") {
    arity(2);
    return FamilySpec::Grid(param(1), param(2));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

Graph Generate(const FamilySpec& spec) {
  std::vector<Edge> edges;
  switch (spec.kind) {
    case Family::kPath:
      for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
      return Graph::FromEdges(spec.a, edges);
    case Family::kCycle:
      for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
      return Graph::FromEdges(spec.a, edges);
    case Family::kComplete:
      for (int u = 0; u < spec.a; ++u) {
        for (int v = u + 1; v < spec.a; ++v) edges.emplace_back(u, v);
      }
      return Graph::FromEdges(spec.a, edges);
    case Family::kCompleteBipartite:
      for (int u = 0; u < spec.a; ++u) {
        for (int v = 0; v < spec.b; ++v) edges.emplace_back(u, spec.a + v);
      }
      return Graph::FromEdges(spec.a + spec.b, edges);
    case Family::kStar:
      for (int v = 1; v <= spec.a; ++v) edges.emplace_back(0, v);
      return Graph::FromEdges(spec.a + 1, edges);
    case Family::kWheel:
      return ApexJoin(Generate(FamilySpec::Cycle(spec.a)));
    case Family::kGrid:
      return CartesianProduct(Generate(FamilySpec::Path(spec.a)),
                              Generate(FamilySpec::Path(spec.b)));
    case Family::kApexJoin:
      if (!spec.base) throw std::invalid_argument("apex join without a graph");
      return ApexJoin(*spec.base);
  }
  throw std::invalid_argument("invalid family spec");
}

Graph CartesianProduct(const Graph& g, const Graph& h, int max_order) {
  if (g.order() == 0 || h.order() == 0) {
    throw std::invalid_argument("cartesian product of an empty graph");
  }
  const long long order = static_cast<long long>(g.order()) * h.order();
  if (order > max_order) {
    throw std::invalid_argument("product order " + std::to_string(order) +
                                " exceeds limit " + std::to_string(max_order));
  }
  const int nh = h.order();
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a) {
    for (const auto& [b1, b2] : h.edges()) {
      edges.emplace_back(a * nh + b1, a * nh + b2);
    }
  }
  for (const auto& [a1, a2] : g.edges()) {
    for (int b = 0; b < nh; ++b) edges.emplace_back(a1 * nh + b, a2 * nh + b);
  }
  return Graph::FromEdges(static_cast<int>(order), edges);
}

Graph ApexJoin(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  const int apex = g.order();
  for (int v = 0; v < apex; ++v) edges.emplace_back(v, apex);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.emplace_back("apex");
  }
  return Graph::FromEdges(apex + 1, edges, std::move(labels));
}

Graph InducedSubgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(static_cast<size_t>(g.order()), -1);
  int next = 0;
  keep.for_each([&](int v) { index[static_cast<size_t>(v)] = next++; });
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) {
      edges.emplace_back(index[static_cast<size_t>(u)],
                         index[static_cast<size_t>(v)]);
    }
  }
  return Graph::FromEdges(next, edges);
}

}  // namespace secdom
