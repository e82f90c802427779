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

// Text formats for graphs.
//
// Edge list: the first non-comment line holds the vertex count n; every
// further non-empty line holds one edge "u v" with 0 <= u, v < n, u != v.
// Lines starting with '#' are comments. Serialization writes edges as
// "u v" with u < v in lexicographic order, which is the canonical form.
//
// Structured: a JSON document {"n": 3, "edges": [[0, 1], [1, 2]],
// "labels": ["a", "b", "c"]}; "labels" is optional.

#ifndef SECDOM_GRAPH_IO_H_
#define SECDOM_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "secdom/graph.h"

namespace secdom {

enum class GraphFormat { kEdgeList, kStructured };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  // 1-based line number, 0 when not attributable to a line.
  int line() const { return line_; }

 private:
  int line_;
};

Graph ParseGraph(std::string_view text, GraphFormat format);
std::string SerializeGraph(const Graph& g, GraphFormat format);

// Picks the structured format when the first non-blank character is '{'.
Graph ParseGraphAuto(std::string_view text);

// Graphviz rendering; vertices carry their labels when present.
std::string ToDot(const Graph& g, const VertexSet* highlight = nullptr);

}  // namespace secdom

#endif  // SECDOM_GRAPH_IO_H_
