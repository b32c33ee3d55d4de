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

#include <functional>
#include <queue>

#include "vsparse/oracles.hpp"

namespace vsparse {

bool operator<(const Distance& a, const Distance& b) {
  if (!a.finite()) return false;
  if (!b.finite()) return true;
  return a.value() < b.value();
}

DistanceMatrix TerminalDistanceMatrix(const TerminalGraph& g) {
  const int k = g.num_terminals();
  DistanceMatrix m(k, std::vector<Distance>(k));
  using Item = std::pair<Rational, VertexId>;
  auto later = [](const Item& a, const Item& b) { return b < a; };
  for (int i = 0; i < k; ++i) {
    std::vector<std::optional<Rational>> dist(g.vertex_bound());
    std::vector<char> done(g.vertex_bound(), 0);
    std::priority_queue<Item, std::vector<Item>, decltype(later)> pq(later);
    dist[g.terminals()[i]] = Rational(0);
    pq.push({Rational(0), g.terminals()[i]});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (EdgeId e : g.OutEdges(v)) {
        const VertexId w = g.Other(e, v);
        Rational nd = d + g.weight(e);
        if (!dist[w] || nd < *dist[w]) {
          dist[w] = nd;
          pq.push({std::move(nd), w});
        }
      }
    }
    for (int j = 0; j < k; ++j) {
      if (auto& d = dist[g.terminals()[j]]) m[i][j] = Distance(*d);
    }
  }
  return m;
}

DistanceMatrix TerminalDistanceMatrixBrute(const TerminalGraph& g) {
  const int k = g.num_terminals();
  DistanceMatrix m(k, std::vector<Distance>(k));
  std::vector<char> on_path(g.vertex_bound(), 0);
  for (int i = 0; i < k; ++i) {
    std::vector<std::optional<Rational>> best(g.vertex_bound());
    std::function<void(VertexId, const Rational&)> walk =
        [&](VertexId v, const Rational& len) {
          if (!best[v] || len < *best[v]) best[v] = len;
          on_path[v] = 1;
          for (EdgeId e : g.OutEdges(v)) {
            const VertexId w = g.Other(e, v);
            if (!on_path[w]) walk(w, len + g.weight(e));
          }
          on_path[v] = 0;
        };
    walk(g.terminals()[i], Rational(0));
    for (int j = 0; j < k; ++j) {
      if (auto& d = best[g.terminals()[j]]) m[i][j] = Distance(*d);
    }
  }
  return m;
}

}  // namespace vsparse
