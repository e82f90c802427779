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

#include "secdom/reductions.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace secdom {

namespace {

std::string Label(const std::string& role, int index) {
  return role + "_" + std::to_string(index + 1);
}

// Source vertices followed by `families.size()` blocks of n added vertices,
// one per role family, each a copy of the source vertex set.
struct LayeredBuilder {
  int n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<int>> roles;

  LayeredBuilder(const Graph& g, const std::vector<std::string>& families)
      : n(g.order()), edges(g.edges()) {
    for (size_t f = 0; f < families.size(); ++f) {
      std::vector<int>& ids = roles[families[f]];
      for (int i = 0; i < n; ++i) {
        ids.push_back(static_cast<int>(f) * n + i);
        labels.push_back(Label(families[f], i));
      }
    }
  }

  int id(const std::string& family, int i) const {
    return roles.at(family)[static_cast<size_t>(i)];
  }
};

ReductionOutput Finish(ReductionKind kind, LayeredBuilder&& b, int offset,
                       const Graph& source) {
  ReductionOutput out;
  out.kind = kind;
  const int total = static_cast<int>(b.labels.size());
  out.graph = Graph::FromEdges(total, b.edges, std::move(b.labels));
  out.offset = offset;
  out.roles = std::move(b.roles);
  out.source_id.assign(static_cast<size_t>(total), -1);
  for (int i = 0; i < source.order(); ++i) out.source_id[static_cast<size_t>(i)] = i;
  out.source_graph = source;
  return out;
}

VertexSet RoleSet(const ReductionOutput& out, const std::string& family) {
  VertexSet s(out.graph.order());
  const auto it = out.roles.find(family);
  if (it != out.roles.end()) {
    for (int v : it->second) s.insert(v);
  }
  return s;
}

void RequireSourceSolution(const ReductionOutput& out, const VertexSet& solution) {
  if (out.kind == ReductionKind::kSetCoverSplit) {
    if (!out.source_instance->IsCover(solution)) {
      throw std::invalid_argument(solution.ToString() + " is not a set cover");
    }
    return;
  }
  const CertificateReport r =
      VerifySet(*out.source_graph, solution, out.source_variant());
  if (!r.holds) {
    throw std::invalid_argument(solution.ToString() + " fails " +
                                std::string(VariantName(out.source_variant())) +
                                ": " + r.violations.front().ToString());
  }
}

void RequireGadgetSolution(const ReductionOutput& out, const VertexSet& witness) {
  const CertificateReport r = VerifySet(out.graph, witness, out.gadget_variant());
  if (!r.holds) {
    throw std::invalid_argument(
        witness.ToString() + " fails " +
        std::string(VariantName(out.gadget_variant())) + " on the gadget: " +
        r.violations.front().ToString());
  }
}

std::optional<EliminationOrdering> BuildSigma(const ReductionOutput& out) {
  const Graph& g = *out.source_graph;
  const std::vector<int>& y1 = out.roles.at("Y1");
  std::vector<Edge> edges;
  for (size_t k = 0; k < y1.size(); ++k) {
    edges.emplace_back(out.roles.at("b")[k], out.roles.at("c")[k]);
  }
  for (size_t k = 0; k < y1.size(); ++k) {
    edges.emplace_back(out.roles.at("a")[k], y1[k]);
  }
  for (int y : out.roles.at("Y2")) {
    int pendant = -1;
    g.neighbors(y).for_each([&](int x) {
      if (pendant == -1 && g.degree(x) == 1) pendant = x;
    });
    if (pendant == -1) return std::nullopt;
    edges.emplace_back(pendant, y);
  }
  EliminationOrdering sigma;
  VertexSet gone = out.graph.empty_set();
  for (const Edge& e : edges) {
    gone.insert(e.first);
    gone.insert(e.second);
    sigma.edges.push_back(e);
    sigma.eliminated.push_back(gone);
  }
  if (!CheckEliminationOrdering(out.graph, sigma).empty()) return std::nullopt;
  return sigma;
}

}  // namespace

std::string_view ReductionName(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kSetCoverSplit:
      return "setcover";
    case ReductionKind::kPeb:
      return "peb";
    case ReductionKind::kInSDom:
      return "insdm";
    case ReductionKind::kGp:
      return "gp";
    case ReductionKind::kApx:
      return "apx";
  }
  return "unknown";
}

std::optional<ReductionKind> ParseReductionKind(std::string_view name) {
  for (ReductionKind k :
       {ReductionKind::kSetCoverSplit, ReductionKind::kPeb,
        ReductionKind::kInSDom, ReductionKind::kGp, ReductionKind::kApx}) {
    if (ReductionName(k) == name) return k;
  }
  return std::nullopt;
}

Variant ReductionOutput::gadget_variant() const {
  switch (kind) {
    case ReductionKind::kSetCoverSplit:
    case ReductionKind::kPeb:
      return Variant::kIDom;
    case ReductionKind::kInSDom:
    case ReductionKind::kApx:
      return Variant::kInSDom;
    case ReductionKind::kGp:
      return Variant::kDom;
  }
  return Variant::kDom;
}

Variant ReductionOutput::source_variant() const {
  switch (kind) {
    case ReductionKind::kSetCoverSplit:
    case ReductionKind::kPeb:
    case ReductionKind::kGp:
      return Variant::kDom;
    case ReductionKind::kInSDom:
    case ReductionKind::kApx:
      return Variant::kInDom;
  }
  return Variant::kDom;
}

ReductionOutput SetCoverToSplit(const SetCoverInstance& inst) {
  const std::vector<std::string> problems = inst.Problems();
  if (!problems.empty()) {
    throw std::invalid_argument("invalid set-cover instance: " + problems.front());
  }
  const int n = inst.universe_size;
  const int m = inst.num_subsets();
  ReductionOutput out;
  out.kind = ReductionKind::kSetCoverSplit;
  out.offset = m;
  std::vector<std::string> labels;
  auto add_family = [&](const std::string& role, int count) {
    std::vector<int>& ids = out.roles[role];
    for (int i = 0; i < count; ++i) {
      ids.push_back(static_cast<int>(labels.size()));
      labels.push_back(Label(role, i));
    }
  };
  add_family("x", n);
  add_family("c", m);
  add_family("u", m);
  add_family("v", m);

  std::vector<Edge> edges;
  const std::vector<int>& c = out.roles["c"];
  const std::vector<int>& u = out.roles["u"];
  const std::vector<int>& v = out.roles["v"];
  for (int j = 0; j < m; ++j) {
    for (int x : inst.subsets[static_cast<size_t>(j)]) {
      edges.emplace_back(out.roles["x"][static_cast<size_t>(x)],
                         c[static_cast<size_t>(j)]);
    }
    edges.emplace_back(u[static_cast<size_t>(j)], v[static_cast<size_t>(j)]);
  }
  std::vector<int> clique(c);
  clique.insert(clique.end(), u.begin(), u.end());
  for (size_t i = 0; i < clique.size(); ++i) {
    for (size_t j = i + 1; j < clique.size(); ++j) {
      edges.emplace_back(clique[i], clique[j]);
    }
  }
  out.graph = Graph::FromEdges(n + 3 * m, edges, std::move(labels));
  out.source_instance = inst;
  return out;
}

ReductionOutput BipartiteDomToPeb(const Graph& g, Y1Rule rule,
                                  const std::optional<VertexSet>& y_side) {
  const auto parts = Bipartition(g);
  if (!parts) throw std::invalid_argument("graph is not bipartite");
  VertexSet y = y_side ? *y_side : parts->second;
  if (y.universe() != g.order()) {
    throw std::invalid_argument("Y side ranges over the wrong universe");
  }
  const VertexSet x = y.complement();
  if (!IsIndependent(g, x) || !IsIndependent(g, y)) {
    throw std::invalid_argument("given Y side is not part of a bipartition");
  }

  ReductionOutput out;
  out.kind = ReductionKind::kPeb;
  out.source_graph = g;
  std::vector<std::string> labels(static_cast<size_t>(g.order()));
  int xi = 0;
  int yi = 0;
  std::vector<int> y_index(static_cast<size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (y.contains(v)) {
      y_index[static_cast<size_t>(v)] = yi;
      labels[static_cast<size_t>(v)] = Label("y", yi++);
    } else {
      labels[static_cast<size_t>(v)] = Label("x", xi++);
      out.roles["x"].push_back(v);
    }
  }
  out.roles["Y1"];
  out.roles["Y2"];
  out.roles["a"];
  out.roles["b"];
  out.roles["c"];

  std::vector<Edge> edges = g.edges();
  int next = g.order();
  y.for_each([&](int v) {
    bool pendant = false;
    g.neighbors(v).for_each([&](int w) { pendant = pendant || g.degree(w) == 1; });
    const bool chosen =
        rule == Y1Rule::kNoPendantNeighbor ? !pendant : pendant;
    if (!chosen) {
      out.roles["Y2"].push_back(v);
      return;
    }
    out.roles["Y1"].push_back(v);
    const int index = y_index[static_cast<size_t>(v)];
    const int a = next++;
    const int b = next++;
    const int c = next++;
    for (const char* role : {"a", "b", "c"}) labels.push_back(Label(role, index));
    out.roles["a"].push_back(a);
    out.roles["b"].push_back(b);
    out.roles["c"].push_back(c);
    edges.emplace_back(v, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
  });

  out.graph = Graph::FromEdges(next, edges, std::move(labels));
  out.offset = static_cast<int>(out.roles["Y1"].size());
  out.source_id.assign(static_cast<size_t>(next), -1);
  for (int v = 0; v < g.order(); ++v) out.source_id[static_cast<size_t>(v)] = v;
  out.sigma = BuildSigma(out);
  return out;
}

ReductionOutput InDomToInSDom(const Graph& g) {
  LayeredBuilder b(g, {"v", "a", "b"});
  for (int i = 0; i < b.n; ++i) {
    b.edges.emplace_back(b.id("v", i), b.id("a", i));
    b.edges.emplace_back(b.id("a", i), b.id("b", i));
  }
  return Finish(ReductionKind::kInSDom, std::move(b), g.order(), g);
}

ReductionOutput GpGraph(const Graph& g) {
  if (g.order() == 0 || !g.IsConnected()) {
    throw std::invalid_argument("gp construction needs a connected graph");
  }
  LayeredBuilder b(g, {"v", "a", "b", "c"});
  for (int i = 0; i < b.n; ++i) {
    b.edges.emplace_back(b.id("v", i), b.id("a", i));
    b.edges.emplace_back(b.id("a", i), b.id("b", i));
    b.edges.emplace_back(b.id("b", i), b.id("c", i));
  }
  return Finish(ReductionKind::kGp, std::move(b), g.order(), g);
}

ReductionOutput ApxGadget(const Graph& g) {
  if (g.order() > 0 && g.max_degree() > 3) {
    throw std::invalid_argument("apx gadget needs maximum degree <= 3, got " +
                                std::to_string(g.max_degree()));
  }
  LayeredBuilder b(g, {"v", "p", "q", "r", "s", "t"});
  for (int i = 0; i < b.n; ++i) {
    b.edges.emplace_back(b.id("v", i), b.id("q", i));
    b.edges.emplace_back(b.id("q", i), b.id("p", i));
    b.edges.emplace_back(b.id("v", i), b.id("r", i));
    b.edges.emplace_back(b.id("r", i), b.id("s", i));
    b.edges.emplace_back(b.id("r", i), b.id("t", i));
  }
  ReductionOutput out =
      Finish(ReductionKind::kApx, std::move(b), 3 * g.order(), g);
  if (out.graph.order() > 0 && out.graph.max_degree() > 5) {
    throw std::logic_error("apx gadget has a vertex of degree above 5");
  }
  return out;
}

VertexSet ForwardWitness(const ReductionOutput& out, const VertexSet& solution) {
  RequireSourceSolution(out, solution);
  const int total = out.graph.order();
  VertexSet w(total);
  auto role = [&](const char* family, int i) {
    return out.roles.at(family)[static_cast<size_t>(i)];
  };

  switch (out.kind) {
    case ReductionKind::kSetCoverSplit:
      solution.for_each([&](int j) { w.insert(role("c", j)); });
      w |= RoleSet(out, "v");
      break;
    case ReductionKind::kPeb:
      solution.for_each([&](int v) { w.insert(v); });
      w |= RoleSet(out, "b");
      // Without pendant paths, a dominating set with no isolated member
      // contains every y (each has a pendant neighbor), and Y alone works.
      if (out.offset == 0 && !VerifySet(out.graph, w, Variant::kIDom).holds) {
        w = RoleSet(out, "Y2");
      }
      break;
    case ReductionKind::kInSDom:
      for (int i = 0; i < out.source_graph->order(); ++i) {
        w.insert(solution.contains(i) ? role("b", i) : role("a", i));
      }
      solution.for_each([&](int v) { w.insert(v); });
      break;
    case ReductionKind::kGp:
      w = RoleSet(out, "b");
      solution.for_each([&](int v) { w.insert(v); });
      break;
    case ReductionKind::kApx:
      w = RoleSet(out, "s") | RoleSet(out, "t");
      for (int i = 0; i < out.source_graph->order(); ++i) {
        w.insert(solution.contains(i) ? role("p", i) : role("q", i));
      }
      solution.for_each([&](int v) { w.insert(v); });
      break;
  }

  const CertificateReport r = VerifySet(out.graph, w, out.gadget_variant());
  if (!r.holds || w.size() > solution.size() + out.offset) {
    throw std::logic_error("forward map produced " + w.ToString() +
                           ", which is not a valid gadget solution of size at "
                           "most " + std::to_string(solution.size() + out.offset));
  }
  return w;
}

VertexSet GpInSDSWitness(const ReductionOutput& out) {
  if (out.kind != ReductionKind::kGp) {
    throw std::invalid_argument("not a gp gadget");
  }
  VertexSet w = RoleSet(out, "a") | RoleSet(out, "c");
  if (!VerifySet(out.graph, w, Variant::kInSDom).holds) {
    throw std::logic_error("a_i and c_i do not form an independent secure "
                           "dominating set");
  }
  return w;
}

VertexSet ExtractCover(const ReductionOutput& out, const VertexSet& ids) {
  if (out.kind != ReductionKind::kSetCoverSplit) {
    throw std::invalid_argument("not a set-cover gadget");
  }
  RequireGadgetSolution(out, ids);
  const SetCoverInstance& inst = *out.source_instance;
  VertexSet cover(inst.num_subsets());
  for (int j = 0; j < inst.num_subsets(); ++j) {
    if (ids.contains(out.roles.at("c")[static_cast<size_t>(j)])) cover.insert(j);
  }
  for (int i = 0; i < inst.universe_size; ++i) {
    if (!ids.contains(out.roles.at("x")[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < inst.num_subsets(); ++j) {
      const auto& subset = inst.subsets[static_cast<size_t>(j)];
      if (std::find(subset.begin(), subset.end(), i) != subset.end()) {
        cover.insert(j);
        break;
      }
    }
  }
  if (!inst.IsCover(cover)) {
    throw std::logic_error("extracted family " + cover.ToString() +
                           " does not cover the universe");
  }
  return cover;
}

VertexSet ExtractSolution(const ReductionOutput& out, const VertexSet& witness) {
  if (out.kind == ReductionKind::kSetCoverSplit) {
    const VertexSet cover = ExtractCover(out, witness);
    if (cover.size() > witness.size() - out.offset) {
      throw std::logic_error("extracted cover exceeds the size bound");
    }
    return cover;
  }
  RequireGadgetSolution(out, witness);
  const Graph& g = *out.source_graph;
  VertexSet s(g.order());
  auto source_part = [&]() {
    for (int v = 0; v < g.order(); ++v) {
      if (witness.contains(v)) s.insert(v);
    }
  };

  switch (out.kind) {
    case ReductionKind::kSetCoverSplit:
      break;
    case ReductionKind::kPeb: {
      source_part();
      const std::vector<int>& y1 = out.roles.at("Y1");
      const std::vector<int>& a = out.roles.at("a");
      for (size_t k = 0; k < y1.size(); ++k) {
        if (witness.contains(a[k])) s.insert(y1[k]);
      }
      break;
    }
    case ReductionKind::kInSDom:
    case ReductionKind::kApx:
      source_part();
      break;
    case ReductionKind::kGp: {
      source_part();
      const std::vector<int>& a = out.roles.at("a");
      for (int i = 0; i < g.order(); ++i) {
        if (witness.contains(a[static_cast<size_t>(i)])) s.insert(i);
      }
      break;
    }
  }

  const CertificateReport r = VerifySet(g, s, out.source_variant());
  if (!r.holds || s.size() > witness.size() - out.offset) {
    throw std::logic_error("extraction produced " + s.ToString() +
                           ", which is not a source solution within the bound");
  }
  return s;
}

}  // namespace secdom
