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
#include <map>
#include <utility>

#include "vsparse/reach_minor.hpp"

namespace vsparse {

// Iterative Tarjan; roots are tried in ascending id order and edges in
// ascending id order, so the output is deterministic.
SccDecomposition SccDecompose(const TerminalGraph& g) {
  const VertexId bound = g.vertex_bound();
  SccDecomposition out;
  out.component_of.assign(bound, -1);
  std::vector<int> index(bound, -1);
  std::vector<int> low(bound, 0);
  std::vector<char> on_stack(bound, 0);
  std::vector<VertexId> stack;
  int counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root : g.Vertices()) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto inc = g.Incident(f.v);
      bool descended = false;
      while (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        const Edge& ed = g.edge(e);
        if (g.directed() && ed.tail != f.v) continue;
        const VertexId w = ed.tail == f.v ? ed.head : ed.tail;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w = kNoVertex;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component_of[w] = static_cast<int>(out.components.size());
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    }
  }

  out.condensation = TerminalGraph::WithVertices(
      true, WeightRole::kNone, static_cast<int>(out.components.size()));
  std::map<std::pair<int, int>, bool> seen;
  for (EdgeId e : g.Edges()) {
    const Edge& ed = g.edge(e);
    const int a = out.component_of[ed.tail];
    const int b = out.component_of[ed.head];
    if (a != b && seen.emplace(std::make_pair(a, b), true).second) {
      out.condensation.AddEdge(a, b, Rational(1));
    }
  }
  std::vector<VertexId> terms;
  std::vector<char> has(out.components.size(), 0);
  for (VertexId t : g.terminals()) {
    const int c = out.component_of[t];
    if (!has[c]) {
      has[c] = 1;
      terms.push_back(c);
    }
  }
  out.condensation.SetTerminals(std::move(terms));
  return out;
}

}  // namespace vsparse
