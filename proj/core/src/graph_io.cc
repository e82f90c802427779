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

#include "secdom/graph_io.h"

#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace secdom {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Reads exactly `count` non-negative integers from a line; anything else
// is a syntax error.
std::vector<int> ReadInts(std::string_view line, size_t count, int line_no) {
  std::istringstream in{std::string(line)};
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    size_t used = 0;
    long value = -1;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size() || value < 0 || value > (1 << 30)) {
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    token + "'");
    }
    out.push_back(static_cast<int>(value));
  }
  if (out.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) +
                                  " integer(s), got " +
                                  std::to_string(out.size()));
  }
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = Trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      n = ReadInts(line, 1, line_no)[0];
      continue;
    }
    const std::vector<int> uv = ReadInts(line, 2, line_no);
    if (uv[0] >= n || uv[1] >= n) {
      throw ParseError(line_no, "edge endpoint exceeds vertex count " +
                                    std::to_string(n));
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop");
    edges.emplace_back(uv[0], uv[1]);
  }
  if (n < 0) throw ParseError(0, "missing vertex count");
  return Graph::FromEdges(n, edges);
}

Graph ParseStructured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError(0, "structured graph needs fields \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0) {
    throw ParseError(0, "\"n\" must be a non-negative integer");
  }
  const int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError(0, "each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    labels = doc["labels"].get<std::vector<std::string>>();
    if (labels.size() != static_cast<size_t>(n)) {
      throw ParseError(0, "inconsistent vertex count: " +
                              std::to_string(labels.size()) +
                              " labels for n = " + std::to_string(n));
    }
  }
  try {
    return Graph::FromEdges(n, edges, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string SerializeEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string SerializeStructured(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) {
    doc["edges"].push_back({u, v});
  }
  if (g.has_labels()) doc["labels"] = g.labels();
  return doc.dump() + "\n";
}

std::string DotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0
                             ? "line " + std::to_string(line) + ": " + message
                             : message),
      line_(line) {}

Graph ParseGraph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return ParseEdgeList(text);
    case GraphFormat::kStructured:
      return ParseStructured(text);
  }
  throw ParseError(0, "unknown graph format");
}

std::string SerializeGraph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return SerializeEdgeList(g);
    case GraphFormat::kStructured:
      return SerializeStructured(g);
  }
  return {};
}

Graph ParseGraphAuto(std::string_view text) {
  const std::string_view trimmed = Trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    return ParseStructured(text);
  }
  return ParseEdgeList(text);
}

std::string ToDot(const Graph& g, const VertexSet* highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    const std::string& label = g.label(v);
    const bool marked = highlight != nullptr && highlight->contains(v);
    if (!label.empty() || marked) {
      out << " [";
      if (!label.empty()) out << "label=\"" << DotEscape(label) << "\"";
      if (marked) {
        if (!label.empty()) out << ", ";
        out << "style=filled, fillcolor=gray";
      }
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace secdom
