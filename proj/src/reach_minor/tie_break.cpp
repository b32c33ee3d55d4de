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

#include <algorithm>
#include <queue>

#include "vsparse/errors.hpp"
#include "vsparse/reach_minor.hpp"

namespace vsparse {

TieBreaker::TieBreaker(TerminalGraph g) : g_(std::move(g)) {
  if (!g_.directed()) throw PreconditionError("tie-breaking needs a digraph");
}

TieBreaker ConsistentTieBreak(const TerminalGraph& g) { return TieBreaker(g); }

TieBreaker::Tree TieBreaker::PathsFrom(VertexId source) const {
  const VertexId bound = g_.vertex_bound();
  Tree tree{std::vector<EdgeId>(bound, kNoEdge), std::vector<int>(bound, -1)};
  std::vector<VertexId> order;
  std::queue<VertexId> q;
  tree.dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    order.push_back(v);
    for (EdgeId e : g_.OutEdges(v)) {
      const VertexId w = g_.edge(e).head;
      if (tree.dist[w] < 0) {
        tree.dist[w] = tree.dist[v] + 1;
        q.push(w);
      }
    }
  }
  // key[v]: edge ids of pi(source, v), descending; smaller lexicographically
  // means a smaller sum of 2^id.
  std::vector<std::vector<EdgeId>> key(bound);
  for (VertexId v : order) {
    if (v == source) continue;
    std::vector<EdgeId> best;
    EdgeId best_edge = kNoEdge;
    for (EdgeId e : g_.InEdges(v)) {
      const VertexId u = g_.edge(e).tail;
      if (tree.dist[u] != tree.dist[v] - 1) continue;
      std::vector<EdgeId> cand = key[u];
      cand.insert(std::upper_bound(cand.begin(), cand.end(), e,
                                   std::greater<EdgeId>()),
                  e);
      if (best_edge == kNoEdge ||
          std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                       best.end())) {
        best = std::move(cand);
        best_edge = e;
      }
    }
    key[v] = std::move(best);
    tree.parent_edge[v] = best_edge;
  }
  return tree;
}

std::optional<std::vector<EdgeId>> TieBreaker::Path(VertexId u,
                                                    VertexId v) const {
  const Tree tree = PathsFrom(u);
  if (tree.dist[v] < 0) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId x = v; x != u; x = g_.edge(tree.parent_edge[x]).tail) {
    path.push_back(tree.parent_edge[x]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace vsparse
