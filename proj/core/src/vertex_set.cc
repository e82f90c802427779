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

#include "secdom/vertex_set.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace secdom {

namespace {

size_t WordCount(int universe) {
  return (static_cast<size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
  words_.assign(WordCount(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::Full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~uint64_t{0});
  s.TrimTail();
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  size_t w = static_cast<size_t>(start) >> 6;
  uint64_t bits = words_[w] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) {
      return static_cast<int>(w * 64 +
                              static_cast<size_t>(std::countr_zero(bits)));
    }
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

void VertexSet::CheckCompatible(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes (" +
                                std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  CheckCompatible(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  CheckCompatible(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckCompatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckCompatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckCompatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (uint64_t& w : out.words_) w = ~w;
  out.TrimTail();
  return out;
}

void VertexSet::TrimTail() {
  const int tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << tail) - 1;
  }
}

std::string VertexSet::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first_member = true;
  for_each([&](int v) {
    if (!first_member) out << ", ";
    out << v;
    first_member = false;
  });
  out << '}';
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const VertexSet& s) {
  return out << s.ToString();
}

bool LexLess(const VertexSet& a, const VertexSet& b) {
  int x = a.first();
  int y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

VertexSet ParseVertexList(const std::string& text, int universe) {
  VertexSet out(universe);
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex id '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("bad vertex id '" + token + "'");
    }
    if (v < 0 || v >= universe) {
      throw std::invalid_argument("vertex id " + token + " out of range [0, " +
                                  std::to_string(universe) + ")");
    }
    out.insert(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace secdom
