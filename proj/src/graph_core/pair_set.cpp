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

#include "vsparse/pair_set.hpp"

#include <string>

#include "vsparse/errors.hpp"

namespace vsparse {

void PairSet::Add(VertexId s, VertexId t) {
  if (s != t) pairs_.insert({s, t});
}

void PairSet::Merge(const PairSet& other) {
  pairs_.insert(other.pairs_.begin(), other.pairs_.end());
}

bool PairSet::Contains(VertexId s, VertexId t) const {
  return pairs_.count({s, t}) > 0;
}

std::vector<TerminalPair> PairSet::ToVector() const {
  return {pairs_.begin(), pairs_.end()};
}

PairSet TrivialPairSet(const TerminalGraph& g) {
  PairSet p;
  for (VertexId s : g.terminals()) {
    for (VertexId t : g.terminals()) p.Add(s, t);
  }
  return p;
}

void RequireTerminalPairs(const TerminalGraph& g, const PairSet& pairs) {
  for (const auto& [s, t] : pairs) {
    if (!g.IsTerminal(s) || !g.IsTerminal(t)) {
      throw PreconditionError("pair endpoint not a terminal: (" +
                              std::to_string(s) + "," + std::to_string(t) +
                              ")");
    }
  }
}

}  // namespace vsparse
