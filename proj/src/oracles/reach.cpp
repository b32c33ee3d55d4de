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

#include <cstdint>
#include <queue>

#include "vsparse/oracles.hpp"

namespace vsparse {

std::vector<char> ReachableFrom(const TerminalGraph& g,
                                const std::vector<VertexId>& sources,
                                bool backward) {
  std::vector<char> seen(g.vertex_bound(), 0);
  std::queue<VertexId> q;
  for (VertexId s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.Incident(v)) {
      const Edge& ed = g.edge(e);
      VertexId next = kNoVertex;
      if (!g.directed()) {
        next = ed.tail == v ? ed.head : ed.tail;
      } else if (!backward && ed.tail == v) {
        next = ed.head;
      } else if (backward && ed.head == v) {
        next = ed.tail;
      }
      if (next != kNoVertex && !seen[next]) {
        seen[next] = 1;
        q.push(next);
      }
    }
  }
  return seen;
}

ReachMatrix TerminalReachMatrix(const TerminalGraph& g) {
  const int k = g.num_terminals();
  ReachMatrix m(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    const auto seen = ReachableFrom(g, {g.terminals()[i]});
    for (int j = 0; j < k; ++j) {
      if (i != j) m[i][j] = seen[g.terminals()[j]] != 0;
    }
  }
  return m;
}

ReachMatrix TerminalReachMatrixByClosure(const TerminalGraph& g) {
  const auto verts = g.Vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<int> index(g.vertex_bound(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> r(n,
                                            std::vector<std::uint64_t>(words));
  auto set = [&](int a, int b) { r[a][b / 64] |= std::uint64_t{1} << (b % 64); };
  auto get = [&](int a, int b) { return (r[a][b / 64] >> (b % 64)) & 1U; };
  for (int i = 0; i < n; ++i) set(i, i);
  for (EdgeId e : g.Edges()) {
    const Edge& ed = g.edge(e);
    set(index[ed.tail], index[ed.head]);
    if (!g.directed()) set(index[ed.head], index[ed.tail]);
  }
  for (int mid = 0; mid < n; ++mid) {
    for (int i = 0; i < n; ++i) {
      if (!get(i, mid)) continue;
      for (int w = 0; w < words; ++w) r[i][w] |= r[mid][w];
    }
  }
  const int k = g.num_terminals();
  ReachMatrix m(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) {
        m[i][j] = get(index[g.terminals()[i]], index[g.terminals()[j]]) != 0;
      }
    }
  }
  return m;
}

}  // namespace vsparse
