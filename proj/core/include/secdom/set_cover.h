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

// Set-cover instances and their text format:
//
//   n m
//   <ids of C_1>
//   ...
//   <ids of C_m>
//
// Element ids are 1-based and separated by single spaces. Serialize(Parse(t))
// reproduces t byte for byte when t is in this canonical form.

#ifndef SECDOM_SET_COVER_H_
#define SECDOM_SET_COVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/vertex_set.h"

namespace secdom {

struct SetCoverInstance {
  int universe_size = 0;
  // 0-based element ids, in the order they were given.
  std::vector<std::vector<int>> subsets;

  int num_subsets() const { return static_cast<int>(subsets.size()); }

  // Problems with the instance: out-of-range or repeated elements, and
  // elements that no subset contains. Empty when the instance is valid.
  std::vector<std::string> Problems() const;
  bool IsValid() const { return Problems().empty(); }

  // `chosen` ranges over subset indices 0..m-1.
  bool IsCover(const VertexSet& chosen) const;

  bool operator==(const SetCoverInstance&) const = default;
};

// Throws ParseError (see graph_io.h) with the offending line number.
SetCoverInstance ParseSetCover(std::string_view text);
std::string SerializeSetCover(const SetCoverInstance& inst);

// Smallest cover by exhaustive search in order of size, lexicographically
// first among equals. Absent when the subsets do not cover the universe.
// Requires m <= 24.
std::optional<VertexSet> MinimumSetCover(const SetCoverInstance& inst);

}  // namespace secdom

#endif  // SECDOM_SET_COVER_H_
