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

#ifndef SECDOM_VERTEX_SET_H_
#define SECDOM_VERTEX_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace secdom {

// A subset of {0, ..., universe-1} stored as a dynamic bitset. Bits at
// positions >= universe are always zero.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet Full(int universe);

  int universe() const { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(int v);
  void erase(int v);
  void clear();

  int size() const;
  bool empty() const;

  // Smallest member, or -1 when empty.
  int first() const;
  // Smallest member strictly greater than v, or -1.
  int next(int v) const;

  std::vector<int> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + static_cast<size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement relative to the universe.
  VertexSet complement() const;

  std::span<const uint64_t> words() const { return words_; }

  bool operator==(const VertexSet& other) const = default;

  // "{1, 3, 5}".
  std::string ToString() const;

 private:
  void CheckCompatible(const VertexSet& other) const;
  void TrimTail();

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

// Lexicographic order on the ascending member sequences; used for the
// deterministic tie-break among witnesses of equal size.
bool LexLess(const VertexSet& a, const VertexSet& b);

std::ostream& operator<<(std::ostream& out, const VertexSet& s);

// Parses "1,3,5" or "1 3 5" into a set over `universe`. Throws
// std::invalid_argument on malformed or out-of-range ids.
VertexSet ParseVertexList(const std::string& text, int universe);

}  // namespace secdom

#endif  // SECDOM_VERTEX_SET_H_
