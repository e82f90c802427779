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

#include "secdom/verify.h"

#include <stdexcept>
#include <vector>

namespace secdom {

namespace {

void RequireOver(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument("vertex set over " +
                                std::to_string(s.universe()) +
                                " vertices used with a graph of order " +
                                std::to_string(g.order()));
  }
}

VertexSet ClosedNeighborhoodOf(const Graph& g, const VertexSet& s) {
  VertexSet covered = s;
  s.for_each([&](int v) { covered |= g.neighbors(v); });
  return covered;
}

bool DominatesAll(const Graph& g, const VertexSet& s) {
  return ClosedNeighborhoodOf(g, s).size() == g.order();
}

bool HasIsolatedMember(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v != -1; v = s.next(v)) {
    if (!g.neighbors(v).intersects(s)) return true;
  }
  return false;
}

}  // namespace

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kDom:
      return "dom";
    case Variant::kInDom:
      return "indom";
    case Variant::kIDom:
      return "idom";
    case Variant::kSDom:
      return "sdom";
    case Variant::kInSDom:
      return "insdom";
  }
  return "unknown";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (VariantName(v) == name) return v;
  }
  return std::nullopt;
}

bool RequiresIndependence(Variant variant) {
  return variant == Variant::kInDom || variant == Variant::kInSDom;
}

bool RequiresSecurity(Variant variant) {
  return variant == Variant::kSDom || variant == Variant::kInSDom;
}

std::string Violation::ToString() const {
  switch (kind) {
    case Kind::kUndominated:
      return "undominated vertex " + std::to_string(vertex);
    case Kind::kAdjacentPair:
      return "edge (" + std::to_string(vertex) + ", " + std::to_string(other) +
             ") inside S";
    case Kind::kUndefended:
      return "undefended vertex " + std::to_string(vertex) +
             " (failed defenders " +
             (failed_defenders ? failed_defenders->ToString() : "{}") + ")";
    case Kind::kNoIsolatedVertex:
      return "no isolated vertex in G[S]";
  }
  return "unknown violation";
}

bool IsDominating(const Graph& g, const VertexSet& s) {
  RequireOver(g, s);
  return DominatesAll(g, s);
}

bool IsIndependent(const Graph& g, const VertexSet& s) {
  RequireOver(g, s);
  for (int v = s.first(); v != -1; v = s.next(v)) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

VertexSet ExternalPrivateNeighbors(const Graph& g, const VertexSet& s, int v) {
  RequireOver(g, s);
  if (!s.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not in S");
  }
  VertexSet out(g.order());
  for (int w = 0; w < g.order(); ++w) {
    if (s.contains(w)) continue;
    const VertexSet hits = g.neighbors(w) & s;
    if (hits.size() == 1 && hits.contains(v)) out.insert(w);
  }
  return out;
}

VertexSet Defenders(const Graph& g, const VertexSet& s, int u) {
  RequireOver(g, s);
  if (s.contains(u)) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " is already in S");
  }
  VertexSet out(g.order());
  const VertexSet candidates = g.neighbors(u) & s;
  candidates.for_each([&](int v) {
    VertexSet swapped = s;
    swapped.erase(v);
    swapped.insert(u);
    if (DominatesAll(g, swapped)) out.insert(v);
  });
  return out;
}

bool IsSecureDominating(const Graph& g, const VertexSet& s) {
  return VerifySet(g, s, Variant::kSDom).holds;
}

bool IsIsolateDominating(const Graph& g, const VertexSet& s) {
  return VerifySet(g, s, Variant::kIDom).holds;
}

CertificateReport VerifySet(const Graph& g, const VertexSet& s,
                            Variant variant) {
  RequireOver(g, s);
  CertificateReport report{variant, true, {}};
  if (g.order() == 0) return report;

  const VertexSet covered = ClosedNeighborhoodOf(g, s);
  for (int v = 0; v < g.order(); ++v) {
    if (!covered.contains(v)) {
      report.violations.push_back({Violation::Kind::kUndominated, v, -1, std::nullopt});
    }
  }
  const bool dominating = report.violations.empty();

  if (RequiresIndependence(variant)) {
    for (int v = s.first(); v != -1; v = s.next(v)) {
      const VertexSet inside = g.neighbors(v) & s;
      for (int w = inside.next(v); w != -1; w = inside.next(w)) {
        report.violations.push_back({Violation::Kind::kAdjacentPair, v, w, std::nullopt});
      }
    }
  }

  if (RequiresSecurity(variant) && dominating) {
    // v defends u iff every vertex dominated by v alone lies in N[u].
    const int n = g.order();
    std::vector<int> hits(static_cast<size_t>(n), 0);
    std::vector<int> owner(static_cast<size_t>(n), -1);
    s.for_each([&](int v) {
      auto mark = [&](int w) {
        ++hits[static_cast<size_t>(w)];
        owner[static_cast<size_t>(w)] = v;
      };
      mark(v);
      g.neighbors(v).for_each(mark);
    });
    std::vector<VertexSet> only(static_cast<size_t>(n));
    s.for_each([&](int v) { only[static_cast<size_t>(v)] = VertexSet(n); });
    for (int w = 0; w < n; ++w) {
      if (hits[static_cast<size_t>(w)] == 1) {
        only[static_cast<size_t>(owner[static_cast<size_t>(w)])].insert(w);
      }
    }
    for (int u = 0; u < n; ++u) {
      if (s.contains(u)) continue;
      VertexSet closed = g.neighbors(u);
      closed.insert(u);
      const VertexSet candidates = g.neighbors(u) & s;
      bool defended = false;
      for (int v = candidates.first(); v != -1 && !defended; v = candidates.next(v)) {
        defended = only[static_cast<size_t>(v)].is_subset_of(closed);
      }
      if (!defended) {
        report.violations.push_back({Violation::Kind::kUndefended, u, -1, candidates});
      }
    }
  }

  if (variant == Variant::kIDom && !HasIsolatedMember(g, s)) {
    report.violations.push_back({Violation::Kind::kNoIsolatedVertex, -1, -1, std::nullopt});
  }

  report.holds = report.violations.empty();
  return report;
}

}  // namespace secdom
