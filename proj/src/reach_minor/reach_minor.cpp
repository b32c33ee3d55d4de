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
#include <functional>
#include <map>
#include <set>

#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/reach_minor.hpp"

namespace vsparse {
namespace {

void RequireDag(const TerminalGraph& g) {
  if (!g.directed()) throw PreconditionError("expected a directed graph");
  if (!IsAcyclic(g)) throw PreconditionError("graph contains a directed cycle");
}

// Contracts in-degree-1 non-terminals into their predecessor, scanning ids in
// ascending order until nothing changes.
void ContractInDegreeOne(MinorRecorder& rec) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : rec.graph().Vertices()) {
      if (!rec.graph().HasVertex(v) || rec.graph().IsTerminal(v)) continue;
      const auto in = rec.graph().InEdges(v);
      if (in.size() != 1) continue;
      const VertexId w = rec.Contract(in.front());
      rec.DropParallelAt(w);
      changed = true;
    }
  }
}

// Algorithm body on the recorder's current graph, which must be acyclic.
void SparsifyDagInPlace(MinorRecorder& rec, const PairSet& pairs) {
  const TerminalGraph& g = rec.graph();
  const TieBreaker tb(g);
  std::vector<char> keep_edge(g.edge_bound(), 0);
  std::vector<char> keep_vertex(g.vertex_bound(), 0);
  for (VertexId t : g.terminals()) keep_vertex[t] = 1;

  std::map<VertexId, std::vector<VertexId>> by_source;
  for (const auto& [s, t] : pairs) by_source[s].push_back(t);
  std::vector<char> walked(g.edge_bound(), 0);
  for (const auto& [s, targets] : by_source) {
    const auto tree = tb.PathsFrom(s);
    std::fill(walked.begin(), walked.end(), 0);
    for (VertexId t : targets) {
      if (tree.dist[t] < 0) continue;
      for (VertexId x = t; x != s;) {
        const EdgeId e = tree.parent_edge[x];
        if (walked[e]) break;  // pi(s, x) is already marked from this source
        walked[e] = 1;
        keep_edge[e] = 1;
        keep_vertex[x] = 1;
        x = g.edge(e).tail;
        keep_vertex[x] = 1;
      }
    }
  }
  for (VertexId v : g.Vertices()) {
    if (!keep_vertex[v]) rec.DeleteVertex(v);
  }
  for (EdgeId e : rec.graph().Edges()) {
    if (!keep_edge[e]) rec.DeleteEdge(e);
  }
  ContractInDegreeOne(rec);
}

// Reachability of every pair in `pairs` using only edges in `mask`.
class MaskReach {
 public:
  MaskReach(const TerminalGraph& g, const std::vector<EdgeId>& edges,
            const std::vector<TerminalPair>& pairs)
      : pairs_(pairs) {
    std::vector<VertexId> verts = g.Vertices();
    index_.assign(g.vertex_bound(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index_[verts[i]] = static_cast<int>(i);
    out_.resize(verts.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& ed = g.edge(edges[i]);
      out_[index_[ed.tail]].push_back({static_cast<int>(i), index_[ed.head]});
    }
  }

  bool Preserves(std::uint32_t mask) const {
    std::vector<char> seen(out_.size());
    int last_source = -1;
    for (const auto& [s, t] : pairs_) {
      const int si = index_[s];
      if (si != last_source) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> stack{si};
        seen[si] = 1;
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          for (const auto& [bit, w] : out_[v]) {
            if (((mask >> bit) & 1U) && !seen[w]) {
              seen[w] = 1;
              stack.push_back(w);
            }
          }
        }
        last_source = si;
      }
      if (!seen[index_[t]]) return false;
    }
    return true;
  }

 private:
  std::vector<TerminalPair> pairs_;
  std::vector<int> index_;
  std::vector<std::vector<std::pair<int, int>>> out_;
};

}  // namespace

bool IsAcyclic(const TerminalGraph& g) {
  std::vector<int> indeg(g.vertex_bound(), 0);
  std::vector<VertexId> ready;
  for (VertexId v : g.Vertices()) {
    indeg[v] = g.InDegree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++done;
    for (EdgeId e : g.OutEdges(v)) {
      if (--indeg[g.edge(e).head] == 0) ready.push_back(g.edge(e).head);
    }
  }
  return done == g.num_vertices();
}

ReachSparsifier MinorSparsifyDag(const TerminalGraph& g, const PairSet& pairs) {
  RequireDag(g);
  RequireTerminalPairs(g, pairs);
  MinorRecorder rec(g);
  SparsifyDagInPlace(rec, pairs);
  auto [h, trace] = std::move(rec).Finish();
  return {std::move(h), std::move(trace)};
}

ReachSparsifier MinorSparsify(const TerminalGraph& g, const PairSet& pairs) {
  if (!g.directed()) throw PreconditionError("expected a directed graph");
  RequireTerminalPairs(g, pairs);
  MinorRecorder rec(g);
  const SccDecomposition scc = SccDecompose(g);

  for (const auto& comp : scc.components) {
    if (comp.size() < 2) continue;
    std::set<VertexId> members(comp.begin(), comp.end());
    const bool has_terminal = std::any_of(
        comp.begin(), comp.end(), [&](VertexId v) { return g.IsTerminal(v); });
    if (has_terminal) {
      // Fold each non-terminal into the SCC along its smallest-head out-edge.
      while (true) {
        auto it = std::find_if(members.begin(), members.end(), [&](VertexId v) {
          return !rec.graph().IsTerminal(v);
        });
        if (it == members.end()) break;
        const VertexId v = *it;
        EdgeId chosen = kNoEdge;
        VertexId chosen_head = kNoVertex;
        for (EdgeId e : rec.graph().OutEdges(v)) {
          const VertexId u = rec.graph().edge(e).head;
          if (!members.count(u)) continue;
          if (chosen == kNoEdge || u < chosen_head) {
            chosen = e;
            chosen_head = u;
          }
        }
        const VertexId w = rec.Contract(chosen);
        members.erase(w == v ? chosen_head : v);
        rec.DropParallelAt(w);
      }
    } else {
      while (members.size() > 1) {
        EdgeId chosen = kNoEdge;
        for (VertexId v : members) {
          for (EdgeId e : rec.graph().OutEdges(v)) {
            if (members.count(rec.graph().edge(e).head) &&
                (chosen == kNoEdge || e < chosen)) {
              chosen = e;
            }
          }
        }
        const Edge ed = rec.graph().edge(chosen);
        const VertexId w = rec.Contract(chosen);
        members.erase(w == ed.tail ? ed.head : ed.tail);
        rec.DropParallelAt(w);
      }
    }
  }

  // Quotient: terminal SCCs become one node named by their smallest terminal.
  const TerminalGraph& hat = rec.graph();
  std::vector<VertexId> rep(hat.vertex_bound(), kNoVertex);
  for (VertexId v : hat.Vertices()) {
    const auto& comp = scc.components[scc.component_of[v]];
    rep[v] = v;
    if (hat.IsTerminal(v)) {
      for (VertexId u : comp) {
        if (hat.HasVertex(u) && hat.IsTerminal(u)) {
          rep[v] = u;
          break;
        }
      }
    }
  }
  std::map<std::pair<VertexId, VertexId>, EdgeId> first;
  std::vector<EdgeId> duplicates;
  for (EdgeId e : hat.Edges()) {
    const Edge& ed = hat.edge(e);
    const VertexId a = rep[ed.tail];
    const VertexId b = rep[ed.head];
    if (a == b) continue;
    if (!first.emplace(std::make_pair(a, b), e).second) duplicates.push_back(e);
  }
  for (EdgeId e : duplicates) rec.DeleteEdge(e);

  TerminalGraph quotient(true, g.role());
  for (VertexId v : rec.graph().Vertices()) {
    if (rep[v] == v) quotient.AddVertexWithId(v);
  }
  for (const auto& [ends, e] : first) {
    quotient.AddEdgeWithId(e, ends.first, ends.second, rec.graph().weight(e));
  }
  std::vector<VertexId> qterms;
  std::set<VertexId> added;
  for (VertexId t : g.terminals()) {
    if (added.insert(rep[t]).second) qterms.push_back(rep[t]);
  }
  quotient.SetTerminals(std::move(qterms));
  PairSet qpairs;
  for (const auto& [s, t] : pairs) qpairs.Add(rep[s], rep[t]);

  MinorRecorder qrec(quotient);
  SparsifyDagInPlace(qrec, qpairs);
  for (const MinorOp& op : qrec.ops()) {
    switch (op.kind) {
      case MinorOpKind::kDeleteVertex:
        rec.DeleteVertex(op.vertex);
        break;
      case MinorOpKind::kDeleteEdge:
        rec.DeleteEdge(op.edge);
        break;
      case MinorOpKind::kContractEdge:
        rec.Contract(op.edge);
        break;
    }
  }
  auto [h, trace] = std::move(rec).Finish();
  return {std::move(h), std::move(trace)};
}

std::vector<EdgeId> SparsestReachabilityPreserver(
    const TerminalGraph& g, const PairSet& pairs,
    const PreserverOptions& options) {
  RequireDag(g);
  RequireTerminalPairs(g, pairs);
  std::vector<TerminalPair> live;
  for (const auto& p : pairs) {
    if (ReachableFrom(g, {p.source})[p.target]) live.push_back(p);
  }
  std::vector<char> relevant(g.edge_bound(), 0);
  for (const auto& [s, t] : live) {
    const auto fwd = ReachableFrom(g, {s});
    const auto bwd = ReachableFrom(g, {t}, true);
    for (EdgeId e : g.Edges()) {
      if (fwd[g.edge(e).tail] && bwd[g.edge(e).head]) relevant[e] = 1;
    }
  }
  std::vector<EdgeId> edges;
  for (EdgeId e : g.Edges()) {
    if (relevant[e]) edges.push_back(e);
  }
  const int m = static_cast<int>(edges.size());
  if (m > options.max_relevant_edges || m > 31) {
    throw SizeGuardError("relevant edge count " + std::to_string(m) +
                         " exceeds guard " +
                         std::to_string(options.max_relevant_edges));
  }
  if (live.empty()) return {};
  const MaskReach reach(g, edges, live);
  std::vector<std::uint32_t> suffix(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | (1U << i);

  std::optional<std::uint32_t> found;
  // Combinations of size r in lexicographic order; the first preserving one is
  // the answer for this r.
  std::function<bool(int, int, std::uint32_t)> search =
      [&](int start, int left, std::uint32_t chosen) {
        if (left == 0) {
          if (reach.Preserves(chosen)) {
            found = chosen;
            return true;
          }
          return false;
        }
        for (int i = start; i + left <= m; ++i) {
          if (!reach.Preserves(chosen | suffix[i])) return false;
          if (search(i + 1, left - 1, chosen | (1U << i))) return true;
        }
        return false;
      };
  for (int r = 1; r <= m && !found; ++r) search(0, r, 0);
  std::vector<EdgeId> out;
  for (int i = 0; i < m; ++i) {
    if ((*found >> i) & 1U) out.push_back(edges[i]);
  }
  return out;
}

ReachSparsifier MinorSparsifyDag2(const TerminalGraph& g, const PairSet& pairs,
                                  const PreserverOptions& options) {
  const auto keep = SparsestReachabilityPreserver(g, pairs, options);
  MinorRecorder rec(g);
  std::vector<char> kept(g.edge_bound(), 0);
  for (EdgeId e : keep) kept[e] = 1;
  for (EdgeId e : g.Edges()) {
    if (!kept[e]) rec.DeleteEdge(e);
  }
  for (VertexId v : g.Vertices()) {
    if (!g.IsTerminal(v) && rec.graph().Degree(v) == 0) rec.DeleteVertex(v);
  }
  ContractInDegreeOne(rec);
  auto [h, trace] = std::move(rec).Finish();
  return {std::move(h), std::move(trace)};
}

std::int64_t CountBranchingEvents(const TerminalGraph& g) {
  if (!g.directed()) throw PreconditionError("expected a directed graph");
  std::int64_t total = 0;
  for (VertexId v : g.Vertices()) {
    const std::int64_t d = g.InDegree(v);
    total += d * (d - 1) / 2;
  }
  return total;
}

nlohmann::json ReachResultJson(const PairSet& pairs,
                               const ReachSparsifier& result) {
  return {{"pairs", pairs.size()},
          {"nonterminals",
           result.graph.num_vertices() - result.graph.num_terminals()},
          {"branching_events", CountBranchingEvents(result.graph)},
          {"trace_len", result.trace.ops.size()}};
}

}  // namespace vsparse
