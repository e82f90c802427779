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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "secdom/classes.h"
#include "secdom/graph_io.h"
#include "secdom/reductions.h"
#include "secdom/set_cover.h"

namespace secdom::cli {

namespace {

using nlohmann::json;

constexpr int kMaxGridConstruction = 4096;

// Signals an exit code together with a message for the error stream.
struct Exit {
  int code;
  std::string message;
};

json SetJson(const std::optional<VertexSet>& s) {
  if (!s) return nullptr;
  return s->members();
}

std::string SetText(const std::optional<VertexSet>& s) {
  return s ? s->ToString() : "absent";
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json GraphJson(const Graph& g) {
  return json::parse(SerializeGraph(g, GraphFormat::kStructured));
}

std::string RenderGraph(const Graph& g, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return SerializeGraph(g, GraphFormat::kEdgeList);
    case OutputFormat::kStructured:
      return Dump(GraphJson(g));
    case OutputFormat::kDot:
      return ToDot(g);
  }
  return "";
}

std::string DecisionName(Decision d) {
  switch (d) {
    case Decision::kYes:
      return "yes";
    case Decision::kNo:
      return "no";
    case Decision::kUnknown:
      return "unknown";
  }
  return "unknown";
}

struct Options {
  std::string format = "text";
  std::string input_path;
  std::string inline_graph;
  std::optional<int> max_n;
  std::optional<long long> max_candidates;
  std::optional<long long> time_limit_ms;
  unsigned long long seed = 1;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Options opts;

  OutputFormat Format() const {
    if (opts.format == "structured" || opts.format == "json") {
      return OutputFormat::kStructured;
    }
    if (opts.format == "dot") return OutputFormat::kDot;
    return OutputFormat::kText;
  }

  SearchBudget Budget() const {
    SearchBudget b;
    if (opts.max_n) b.max_n = *opts.max_n;
    if (opts.max_candidates) b.max_candidates = *opts.max_candidates;
    if (opts.time_limit_ms) b.time_limit = std::chrono::milliseconds(*opts.time_limit_ms);
    try {
      b.Validate();
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, e.what()};
    }
    return b;
  }

  std::string ReadInput() {
    if (!opts.input_path.empty() && !opts.inline_graph.empty()) {
      throw Exit{kUsage, "give at most one of --input and --graph"};
    }
    if (!opts.inline_graph.empty()) {
      std::string text = opts.inline_graph;
      std::replace(text.begin(), text.end(), ';', '\n');
      return text;
    }
    if (!opts.input_path.empty()) {
      std::ifstream file(opts.input_path);
      if (!file) throw Exit{kUsage, "cannot open " + opts.input_path};
      return {std::istreambuf_iterator<char>(file), {}};
    }
    return {std::istreambuf_iterator<char>(in_), {}};
  }

  Graph ReadGraph() {
    try {
      return ParseGraphAuto(ReadInput());
    } catch (const ParseError& e) {
      throw Exit{kUsage, std::string("input graph: ") + e.what()};
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, std::string("input graph: ") + e.what()};
    }
  }

  Graph ReadSolvable(const SearchBudget& budget) {
    Graph g = ReadGraph();
    if (g.order() > budget.max_n || g.order() > kSolverOrderLimit) {
      throw Exit{kBudget, "graph order " + std::to_string(g.order()) +
                              " exceeds the solver cap " +
                              std::to_string(std::min(budget.max_n,
                                                      kSolverOrderLimit))};
    }
    return g;
  }

  static Variant ToVariant(const std::string& name) {
    const std::optional<Variant> v = ParseVariant(name);
    if (!v) throw Exit{kUsage, "unknown variant '" + name + "'"};
    return *v;
  }

  static FamilySpec ToFamily(std::vector<std::string> tokens) {
    try {
      if (!tokens.empty() && tokens.front() == "apex") {
        tokens.erase(tokens.begin());
        return FamilySpec::ApexJoin(Generate(ParseFamilySpec(tokens)));
      }
      return ParseFamilySpec(tokens);
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, e.what()};
    }
  }

  int Gen(const std::vector<std::string>& tokens) {
    if (!tokens.empty() && tokens.front() == "random") {
      if (tokens.size() != 3) throw Exit{kUsage, "usage: gen random <n> <p>"};
      int n = 0;
      double p = 0;
      try {
        n = std::stoi(tokens[1]);
        p = std::stod(tokens[2]);
      } catch (const std::exception&) {
        throw Exit{kUsage, "gen random expects an integer n and a probability p"};
      }
      if (n < 0 || p < 0 || p > 1) {
        throw Exit{kUsage, "gen random needs n >= 0 and 0 <= p <= 1"};
      }
      std::mt19937_64 rng(opts.seed);
      std::bernoulli_distribution coin(p);
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng)) edges.emplace_back(u, v);
        }
      }
      out_ << RenderGraph(Graph::FromEdges(n, edges), Format());
      return kOk;
    }
    out_ << RenderGraph(Generate(ToFamily(tokens)), Format());
    return kOk;
  }

  int Solve(const std::string& variant_name, std::optional<int> k) {
    const Variant variant = ToVariant(variant_name);
    const SearchBudget budget = Budget();
    const Graph g = ReadSolvable(budget);
    if (k) {
      if (*k < 0) throw Exit{kUsage, "--k must be non-negative"};
      const DecisionResult r = SolveDecision(g, variant, *k, budget);
      out_ << FormatDecision(g, variant, *k, r, Format());
      if (r.answer == Decision::kUnknown) return kBudget;
      return r.answer == Decision::kYes ? kOk : kAbsent;
    }
    const Solution sol = secdom::Solve(g, variant, budget);
    out_ << FormatSolution(g, sol, Format());
    if (!sol.exhausted) return kBudget;
    return sol.value ? kOk : kAbsent;
  }

  int Verify(const std::string& variant_name, const std::string& set_text) {
    const Variant variant = ToVariant(variant_name);
    const Graph g = ReadGraph();
    VertexSet s;
    try {
      s = ParseVertexList(set_text, g.order());
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, std::string("--set: ") + e.what()};
    }
    const CertificateReport report = VerifySet(g, s, variant);
    out_ << FormatReport(g, s, report, Format());
    return report.holds ? kOk : kAbsent;
  }

  int Recognize(const std::string& cls) {
    const Graph g = ReadGraph();
    json j{{"class", cls}};
    std::ostringstream text;
    text << "class: " << cls << "\n";
    std::optional<VertexSet> highlight;
    int code = kOk;

    auto member = [&](const std::string& answer) {
      j["member"] = answer;
      text << "member: " << answer << "\n";
    };
    auto set_field = [&](const std::string& key, const VertexSet& s) {
      j[key] = s.members();
      text << key << ": " << s.ToString() << "\n";
    };

    if (cls == "bipartite") {
      const auto parts = Bipartition(g);
      member(parts ? "yes" : "no");
      if (parts) {
        set_field("X", parts->first);
        set_field("Y", parts->second);
        highlight = parts->first;
      } else {
        code = kAbsent;
      }
    } else if (cls == "split") {
      const auto p = FindSplitPartition(g);
      member(p ? "yes" : "no");
      if (p) {
        set_field("clique", p->clique);
        set_field("independent", p->independent);
        highlight = p->clique;
      } else {
        code = kAbsent;
      }
    } else if (cls == "threshold") {
      const auto cert = RecognizeThreshold(g);
      member(cert ? "yes" : "no");
      if (cert) {
        set_field("clique", cert->partition.clique);
        set_field("independent", cert->partition.independent);
        j["clique_order"] = cert->clique_order;
        j["independent_order"] = cert->independent_order;
        auto seq = [](const std::vector<int>& v) {
          std::string s;
          for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
          return s;
        };
        text << "clique_order: " << seq(cert->clique_order) << "\n";
        text << "independent_order: " << seq(cert->independent_order) << "\n";
        highlight = cert->partition.clique;
        if (g.order() > 0 && g.IsConnected()) {
          const VertexSet s = ThresholdInSDS(g);
          set_field("insds", s);
          j["insds_size"] = s.size();
          text << "insds_size: " << s.size() << "\n";
          highlight = s;
        }
      } else {
        code = kAbsent;
      }
    } else if (cls == "peb") {
      const PebResult r = PerfectEdgeElimination(g);
      const char* names[] = {"yes", "no", "unresolved"};
      member(names[static_cast<int>(r.status)]);
      if (r.ordering) {
        json edges = json::array();
        text << "ordering:";
        for (const auto& [u, v] : r.ordering->edges) {
          edges.push_back({u, v});
          text << " (" << u << ", " << v << ")";
        }
        text << "\n";
        j["ordering"] = edges;
      }
      if (r.status == PebStatus::kAbsent) code = kAbsent;
      if (r.status == PebStatus::kUnresolved) code = kBudget;
    } else {
      throw Exit{kUsage, "unknown class '" + cls +
                             "' (bipartite, split, threshold, peb)"};
    }

    switch (Format()) {
      case OutputFormat::kText:
        out_ << text.str();
        break;
      case OutputFormat::kStructured:
        out_ << Dump(j);
        break;
      case OutputFormat::kDot:
        out_ << ToDot(g, highlight ? &*highlight : nullptr);
        break;
    }
    return code;
  }

  int Reduce(const std::string& which, const std::string& y1_rule) {
    const std::optional<ReductionKind> kind = ParseReductionKind(which);
    if (!kind) {
      throw Exit{kUsage, "unknown reduction '" + which +
                             "' (setcover, peb, insdm, gp, apx)"};
    }
    ReductionOutput r;
    try {
      switch (*kind) {
        case ReductionKind::kSetCoverSplit:
          r = SetCoverToSplit(ParseSetCover(ReadInput()));
          break;
        case ReductionKind::kPeb: {
          Y1Rule rule = Y1Rule::kNoPendantNeighbor;
          if (y1_rule == "pendant") {
            rule = Y1Rule::kHasPendantNeighbor;
          } else if (y1_rule != "no-pendant") {
            throw Exit{kUsage, "--y1-rule must be no-pendant or pendant"};
          }
          r = BipartiteDomToPeb(ReadGraph(), rule);
          break;
        }
        case ReductionKind::kInSDom:
          r = InDomToInSDom(ReadGraph());
          break;
        case ReductionKind::kGp:
          r = GpGraph(ReadGraph());
          break;
        case ReductionKind::kApx:
          r = ApxGadget(ReadGraph());
          break;
      }
    } catch (const ParseError& e) {
      throw Exit{kUsage, std::string("input: ") + e.what()};
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, e.what()};
    }

    switch (Format()) {
      case OutputFormat::kText: {
        out_ << "# reduction " << ReductionName(r.kind) << "\n";
        out_ << "# gadget problem " << VariantName(r.gadget_variant())
             << ", offset " << r.offset << "\n";
        for (const auto& [role, ids] : r.roles) {
          out_ << "# role " << role << ":";
          for (int v : ids) out_ << " " << v;
          out_ << "\n";
        }
        out_ << SerializeGraph(r.graph, GraphFormat::kEdgeList);
        break;
      }
      case OutputFormat::kStructured: {
        json j = GraphJson(r.graph);
        j["reduction"] = std::string(ReductionName(r.kind));
        j["gadget_problem"] = std::string(VariantName(r.gadget_variant()));
        j["offset"] = r.offset;
        j["roles"] = r.roles;
        if (r.kind == ReductionKind::kPeb) {
          json sigma = nullptr;
          if (r.sigma) {
            sigma = json::array();
            for (const auto& [u, v] : r.sigma->edges) sigma.push_back({u, v});
          }
          j["sigma"] = sigma;
        }
        out_ << Dump(j);
        break;
      }
      case OutputFormat::kDot:
        out_ << ToDot(r.graph);
        break;
    }
    return kOk;
  }

  int Family(const std::vector<std::string>& tokens) {
    const FamilySpec spec = ToFamily(tokens);
    ClosedFormResult result;
    try {
      result = ClosedForm(spec, Budget());
    } catch (const BudgetExceeded& e) {
      throw Exit{kBudget, e.what()};
    }
    std::optional<VertexSet> construction;
    if (spec.kind == Family::kGrid &&
        spec.a * spec.b <= kMaxGridConstruction) {
      construction = GridWitness(spec.a, spec.b);
    }
    std::string text = FormatClosedForm(spec, result, Format());
    if (construction) {
      if (Format() == OutputFormat::kText) {
        text += "construction: " + construction->ToString() + "\n";
        text += "construction_size: " + std::to_string(construction->size()) + "\n";
      } else if (Format() == OutputFormat::kStructured) {
        json j = json::parse(text);
        j["construction"] = construction->members();
        text = Dump(j);
      } else {
        text = ToDot(Generate(spec), &*construction);
      }
    }
    out_ << text;
    return result.value || result.upper_bound ? kOk : kAbsent;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

std::string FormatSolution(const Graph& g, const Solution& sol,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::ostringstream s;
      s << "variant: " << VariantName(sol.variant) << "\n";
      s << "value: " << (sol.value ? std::to_string(*sol.value) : "absent") << "\n";
      s << "witness: " << SetText(sol.witness) << "\n";
      s << "exhausted: " << (sol.exhausted ? "true" : "false") << "\n";
      s << "explored: " << sol.explored << "\n";
      return s.str();
    }
    case OutputFormat::kStructured: {
      json j{{"variant", std::string(VariantName(sol.variant))},
             {"witness", SetJson(sol.witness)},
             {"exhausted", sol.exhausted},
             {"explored", sol.explored}};
      j["value"] = sol.value ? json(*sol.value) : json("absent");
      return Dump(j);
    }
    case OutputFormat::kDot:
      return ToDot(g, sol.witness ? &*sol.witness : nullptr);
  }
  return "";
}

std::string FormatDecision(const Graph& g, Variant variant, int k,
                           const DecisionResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::ostringstream s;
      s << "variant: " << VariantName(variant) << "\n";
      s << "k: " << k << "\n";
      s << "answer: " << DecisionName(result.answer) << "\n";
      s << "witness: " << SetText(result.witness) << "\n";
      s << "explored: " << result.explored << "\n";
      return s.str();
    }
    case OutputFormat::kStructured:
      return Dump(json{{"variant", std::string(VariantName(variant))},
                       {"k", k},
                       {"answer", DecisionName(result.answer)},
                       {"witness", SetJson(result.witness)},
                       {"explored", result.explored}});
    case OutputFormat::kDot:
      return ToDot(g, result.witness ? &*result.witness : nullptr);
  }
  return "";
}

std::string FormatReport(const Graph& g, const VertexSet& s,
                         const CertificateReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::ostringstream out;
      out << "variant: " << VariantName(report.variant) << "\n";
      out << "set: " << s.ToString() << "\n";
      out << "holds: " << (report.holds ? "true" : "false") << "\n";
      for (const Violation& v : report.violations) {
        out << "violation: " << v.ToString() << "\n";
      }
      return out.str();
    }
    case OutputFormat::kStructured: {
      json violations = json::array();
      for (const Violation& v : report.violations) violations.push_back(v.ToString());
      return Dump(json{{"variant", std::string(VariantName(report.variant))},
                       {"set", s.members()},
                       {"holds", report.holds},
                       {"violations", violations}});
    }
    case OutputFormat::kDot:
      return ToDot(g, &s);
  }
  return "";
}

std::string FormatClosedForm(const FamilySpec& spec,
                             const ClosedFormResult& result,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::ostringstream s;
      s << "family: " << spec.ToString() << "\n";
      s << "value: " << (result.value ? std::to_string(*result.value) : "absent")
        << "\n";
      s << "witness: " << SetText(result.witness) << "\n";
      if (result.upper_bound) s << "upper_bound: " << *result.upper_bound << "\n";
      s << "source: " << result.source << "\n";
      return s.str();
    }
    case OutputFormat::kStructured: {
      json j{{"family", spec.ToString()},
             {"witness", SetJson(result.witness)},
             {"source", result.source}};
      j["value"] = result.value ? json(*result.value) : json("absent");
      j["upper_bound"] = result.upper_bound ? json(*result.upper_bound) : json(nullptr);
      return Dump(j);
    }
    case OutputFormat::kDot: {
      const Graph g = Generate(spec);
      return ToDot(g, result.witness ? &*result.witness : nullptr);
    }
  }
  return "";
}

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Runner runner(in, out);
  Options& o = runner.opts;

  CLI::App app{"Domination variants: exact solving, verification, graph "
               "classes and gadget reductions.",
               "secdom"};
  app.require_subcommand(1);
  app.add_option("-f,--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "json", "dot"}));
  app.add_option("-i,--input", o.input_path, "Read input from FILE instead of stdin");
  app.add_option("-g,--graph", o.inline_graph,
                 "Inline edge list with ';' for newlines, e.g. \"3;0 1;1 2\"");
  app.add_option("--max-n", o.max_n, "Solver cap on graph order")
      ->envname("SECDOM_MAX_N");
  app.add_option("--max-candidates", o.max_candidates, "Solver cap on search nodes")
      ->envname("SECDOM_MAX_CANDIDATES");
  app.add_option("--time-limit-ms", o.time_limit_ms, "Solver wall-clock cap")
      ->envname("SECDOM_TIME_LIMIT_MS");
  app.add_option("--seed", o.seed, "Seed for gen random")->envname("SECDOM_SEED");

  std::vector<std::string> family_tokens;
  std::string variant;
  std::optional<int> k;
  std::string set_text;
  std::string cls;
  std::string which;
  std::string y1_rule = "no-pendant";

  CLI::App* gen = app.add_subcommand(
      "gen", "Write a graph: path N, cycle N, complete N, kbip P Q, star Q, "
             "wheel N, grid M K, apex <family>, random N P");
  gen->add_option("family", family_tokens, "Family and parameters")->required();

  CLI::App* solve = app.add_subcommand("solve", "Exact minimum for a variant");
  solve->add_option("variant", variant, "dom, indom, idom, sdom or insdom")->required();
  solve->add_option("--k", k, "Decide whether a feasible set of size <= k exists");

  CLI::App* verify = app.add_subcommand("verify", "Check a vertex set");
  verify->add_option("variant", variant, "dom, indom, idom, sdom or insdom")->required();
  verify->add_option("--set", set_text, "Vertex ids, e.g. 1,3,5")->required();

  CLI::App* recognize = app.add_subcommand("recognize", "Graph class membership");
  recognize->add_option("class", cls, "bipartite, split, threshold or peb")->required();

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Build a gadget (setcover reads a set-cover instance)");
  reduce->add_option("which", which, "setcover, peb, insdm, gp or apx")->required();
  reduce->add_option("--y1-rule", y1_rule,
                     "peb only: no-pendant (default) or pendant");

  CLI::App* family = app.add_subcommand("family", "Closed-form value of a family");
  family->add_option("spec", family_tokens, "Family and parameters")->required();

  std::vector<const char*> argv{"secdom"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*gen) return runner.Gen(family_tokens);
    if (*solve) return runner.Solve(variant, k);
    if (*verify) return runner.Verify(variant, set_text);
    if (*recognize) return runner.Recognize(cls);
    if (*reduce) return runner.Reduce(which, y1_rule);
    if (*family) return runner.Family(family_tokens);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    if (e.code == kUsage) err << app.help();
    return e.code;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace secdom::cli
