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

#include <queue>
#include <string>

#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"

namespace vsparse {
namespace {

class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}

  void AddEdge(int u, int v, const Rational& c, bool undirected) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, c});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, undirected ? c : Rational(0)});
  }

  // Edmonds-Karp from the set `sources` to the set `sinks`.
  Rational MaxFlow(const std::vector<int>& sources,
                   const std::vector<char>& is_sink) {
    Rational total;
    const int n = static_cast<int>(adj_.size());
    while (true) {
      std::vector<int> parent_arc(n, -1);
      std::vector<char> seen(n, 0);
      std::queue<int> q;
      for (int s : sources) {
        seen[s] = 1;
        q.push(s);
      }
      int hit = -1;
      while (!q.empty() && hit < 0) {
        const int v = q.front();
        q.pop();
        for (int a : adj_[v]) {
          const int w = arcs_[a].to;
          if (seen[w] || arcs_[a].cap.is_zero() || arcs_[a].cap.is_negative()) {
            continue;
          }
          seen[w] = 1;
          parent_arc[w] = a;
          if (is_sink[w]) {
            hit = w;
            break;
          }
          q.push(w);
        }
      }
      if (hit < 0) break;
      Rational bottleneck = arcs_[parent_arc[hit]].cap;
      for (int v = hit; parent_arc[v] >= 0; v = arcs_[parent_arc[v] ^ 1].to) {
        bottleneck = min(bottleneck, arcs_[parent_arc[v]].cap);
      }
      for (int v = hit; parent_arc[v] >= 0; v = arcs_[parent_arc[v] ^ 1].to) {
        arcs_[parent_arc[v]].cap -= bottleneck;
        arcs_[parent_arc[v] ^ 1].cap += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

  std::vector<char> ResidualReach(const std::vector<int>& sources) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    for (int s : sources) {
      seen[s] = 1;
      q.push(s);
    }
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : adj_[v]) {
        const int w = arcs_[a].to;
        if (!seen[w] && !arcs_[a].cap.is_zero()) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Rational cap;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

void CheckSide(const TerminalGraph& g, TerminalMask side) {
  const int k = g.num_terminals();
  if (k > 31) throw SizeGuardError("more than 31 terminals");
  const TerminalMask full = (TerminalMask{1} << k) - 1;
  if ((side & full) == 0 || (side & full) == full || (side & ~full) != 0) {
    throw PreconditionError("terminal side must be a non-empty proper subset");
  }
}

}  // namespace

CutResult TerminalMincut(const TerminalGraph& g, TerminalMask side) {
  CheckSide(g, side);
  const auto verts = g.Vertices();
  std::vector<int> index(g.vertex_bound(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  FlowNetwork net(static_cast<int>(verts.size()));
  for (EdgeId e : g.Edges()) {
    const Edge& ed = g.edge(e);
    net.AddEdge(index[ed.tail], index[ed.head], ed.weight, !g.directed());
  }
  std::vector<int> sources;
  std::vector<char> is_sink(verts.size(), 0);
  for (int i = 0; i < g.num_terminals(); ++i) {
    const int v = index[g.terminals()[i]];
    if ((side >> i) & 1U) {
      sources.push_back(v);
    } else {
      is_sink[v] = 1;
    }
  }
  CutResult result;
  result.value = net.MaxFlow(sources, is_sink);
  const auto reach = net.ResidualReach(sources);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (reach[i]) result.source_side.push_back(verts[i]);
  }
  return result;
}

Rational TerminalMincutExhaustive(const TerminalGraph& g, TerminalMask side) {
  CheckSide(g, side);
  std::vector<VertexId> free;
  for (VertexId v : g.Vertices()) {
    if (!g.IsTerminal(v)) free.push_back(v);
  }
  if (free.size() > 20) throw SizeGuardError("exhaustive cut beyond 20 free vertices");
  std::vector<char> on_source(g.vertex_bound(), 0);
  for (int i = 0; i < g.num_terminals(); ++i) {
    on_source[g.terminals()[i]] = static_cast<char>((side >> i) & 1U);
  }
  std::optional<Rational> best;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      on_source[free[i]] = static_cast<char>((mask >> i) & 1U);
    }
    Rational cut;
    for (EdgeId e : g.Edges()) {
      const Edge& ed = g.edge(e);
      if (on_source[ed.tail] && !on_source[ed.head]) cut += ed.weight;
      if (!g.directed() && !on_source[ed.tail] && on_source[ed.head]) cut += ed.weight;
    }
    if (!best || cut < *best) best = cut;
  }
  return *best;
}

MincutTable TerminalMincutTable(const TerminalGraph& g, int cap) {
  const int k = g.num_terminals();
  if (k > cap) {
    throw SizeGuardError("terminal count " + std::to_string(k) +
                         " exceeds table cap " + std::to_string(cap));
  }
  MincutTable table;
  if (k < 2) return table;
  const TerminalMask rest = (TerminalMask{1} << (k - 1)) - 1;
  for (TerminalMask c = 0; c < rest; ++c) {
    const TerminalMask side = 1U | (c << 1);
    table.emplace(side, TerminalMincut(g, side).value);
  }
  return table;
}

}  // namespace vsparse
