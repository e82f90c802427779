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

#include "secdom/set_cover.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "secdom/graph_io.h"

namespace secdom {

namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    const size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<int> ParseInts(std::string_view line, int line_no) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos == line.size()) break;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() &&
                              *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_no, "expected integers, got '" +
                                    std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

std::vector<std::string> SetCoverInstance::Problems() const {
  std::vector<std::string> problems;
  if (universe_size < 0) problems.push_back("negative universe size");
  std::vector<bool> covered(static_cast<size_t>(std::max(universe_size, 0)));
  for (size_t j = 0; j < subsets.size(); ++j) {
    std::vector<bool> seen(covered.size());
    for (int x : subsets[j]) {
      const std::string where = "C_" + std::to_string(j + 1);
      if (x < 0 || x >= universe_size) {
        problems.push_back(where + " has element " + std::to_string(x + 1) +
                           " outside 1.." + std::to_string(universe_size));
        continue;
      }
      if (seen[static_cast<size_t>(x)]) {
        problems.push_back(where + " repeats element " + std::to_string(x + 1));
      }
      seen[static_cast<size_t>(x)] = true;
      covered[static_cast<size_t>(x)] = true;
    }
  }
  for (size_t x = 0; x < covered.size(); ++x) {
    if (!covered[x]) {
      problems.push_back("element " + std::to_string(x + 1) +
                         " is in no subset");
    }
  }
  return problems;
}

bool SetCoverInstance::IsCover(const VertexSet& chosen) const {
  if (chosen.universe() != num_subsets()) {
    throw std::invalid_argument("cover must range over the " +
                                std::to_string(num_subsets()) + " subsets");
  }
  VertexSet covered(universe_size);
  chosen.for_each([&](int j) {
    for (int x : subsets[static_cast<size_t>(j)]) covered.insert(x);
  });
  return covered.size() == universe_size;
}

SetCoverInstance ParseSetCover(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const std::vector<int> header = ParseInts(lines[0], 1);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw ParseError(1, "header must be two non-negative integers 'n m'");
  }
  SetCoverInstance inst;
  inst.universe_size = header[0];
  const int m = header[1];
  if (static_cast<int>(lines.size()) - 1 < m) {
    throw ParseError(static_cast<int>(lines.size()) + 1,
                     "expected " + std::to_string(m) + " subset lines");
  }
  for (int j = 0; j < m; ++j) {
    const int line_no = j + 2;
    std::vector<int> ids = ParseInts(lines[static_cast<size_t>(j + 1)], line_no);
    for (int& x : ids) {
      if (x < 1 || x > inst.universe_size) {
        throw ParseError(line_no, "element " + std::to_string(x) +
                                      " outside 1.." +
                                      std::to_string(inst.universe_size));
      }
      --x;
    }
    inst.subsets.push_back(std::move(ids));
  }
  for (size_t i = static_cast<size_t>(m) + 1; i < lines.size(); ++i) {
    if (!ParseInts(lines[i], static_cast<int>(i) + 1).empty()) {
      throw ParseError(static_cast<int>(i) + 1, "unexpected extra subset line");
    }
  }
  return inst;
}

std::string SerializeSetCover(const SetCoverInstance& inst) {
  std::string out = std::to_string(inst.universe_size) + " " +
                    std::to_string(inst.num_subsets()) + "\n";
  for (const auto& subset : inst.subsets) {
    for (size_t i = 0; i < subset.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(subset[i] + 1);
    }
    out += '\n';
  }
  return out;
}

std::optional<VertexSet> MinimumSetCover(const SetCoverInstance& inst) {
  const int m = inst.num_subsets();
  if (m > 24) throw std::invalid_argument("exhaustive set cover needs m <= 24");
  VertexSet all(m);
  for (int j = 0; j < m; ++j) all.insert(j);
  if (!inst.IsCover(all)) return std::nullopt;
  for (int size = 0; size <= m; ++size) {
    VertexSet pick(m);
    std::optional<VertexSet> found;
    std::function<void(int, int)> choose = [&](int start, int left) {
      if (found) return;
      if (left == 0) {
        if (inst.IsCover(pick)) found = pick;
        return;
      }
      for (int j = start; j <= m - left && !found; ++j) {
        pick.insert(j);
        choose(j + 1, left - 1);
        pick.erase(j);
      }
    };
    choose(0, size);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace secdom
