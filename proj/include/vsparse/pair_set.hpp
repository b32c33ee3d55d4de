// Copyright 2026 The vsparse Authors
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

#ifndef VSPARSE_PAIR_SET_HPP_
#define VSPARSE_PAIR_SET_HPP_

#include <compare>
#include <set>
#include <vector>

#include "vsparse/terminal_graph.hpp"

namespace vsparse {

struct TerminalPair {
  VertexId source = kNoVertex;
  VertexId target = kNoVertex;
  friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

// Ordered pairs (s, t) with s != t, kept sorted and unique.
class PairSet {
 public:
  PairSet() = default;

  // Self-pairs are ignored.
  void Add(VertexId s, VertexId t);
  void Merge(const PairSet& other);
  bool Contains(VertexId s, VertexId t) const;
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  std::vector<TerminalPair> ToVector() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::set<TerminalPair> pairs_;
};

// All k(k-1) ordered pairs of distinct terminals of g.
PairSet TrivialPairSet(const TerminalGraph& g);

// Throws PreconditionError when a pair endpoint is not a terminal of g.
void RequireTerminalPairs(const TerminalGraph& g, const PairSet& pairs);

}  // namespace vsparse

#endif  // VSPARSE_PAIR_SET_HPP_
