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
#include <set>

#include "vsparse/errors.hpp"
#include "vsparse/planar_reach.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {
namespace {

class PairReducer {
 public:
  PairReducer(const std::vector<VertexId>& terminals, const SeparatorOptions& options)
      : original_(terminals.begin(), terminals.end()), options_(options) {}

  void Run(const TerminalGraph& sub, const std::vector<VertexId>& terms, int depth) {
    if (sub.num_vertices() <= 1 || terms.empty()) return;
    out_.max_depth = std::max(out_.max_depth, depth);
    PathSeparator sep;
    try {
      sep = FindPathSeparator(sub, options_);
    } catch (const PreconditionError&) {
      ++out_.degraded;
      for (VertexId s : terms) {
        for (VertexId t : terms) out_.pairs.Add(s, t);
      }
      return;
    }
    if (sep.oversized) ++out_.oversized;
    for (const auto& path : sep.paths) Label(sub, path, terms);
    for (const auto& comp : sep.components) {
      std::vector<VertexId> inside;
      for (VertexId t : terms) {
        if (std::binary_search(comp.begin(), comp.end(), t)) inside.push_back(t);
      }
      if (!inside.empty()) Run(InducedSubgraph(sub, comp), inside, depth + 1);
    }
  }

  ReducedPairs Finish() && {
    out_.new_terminals.assign(declared_.begin(), declared_.end());
    return std::move(out_);
  }

 private:
  // Pairs joining every terminal to its first and last contact with `path`,
  // and consecutive marked vertices along it.
  void Label(const TerminalGraph& sub, const std::vector<VertexId>& path,
             const std::vector<VertexId>& terms) {
    std::vector<int> position(sub.vertex_bound(), -1);
    for (std::size_t i = 0; i < path.size(); ++i) position[path[i]] = static_cast<int>(i);
    std::set<int> marked;
    for (VertexId t : terms) {
      if (position[t] >= 0) marked.insert(position[t]);
    }
    for (VertexId x : terms) {
      const PathEndpoints ends = ReachEndpointsOnPath(sub, path, x);
      if (ends.to_x) {
        Declare(*ends.to_x);
        marked.insert(position[*ends.to_x]);
        out_.pairs.Add(x, *ends.to_x);
      }
      if (ends.from_x) {
        Declare(*ends.from_x);
        marked.insert(position[*ends.from_x]);
        out_.pairs.Add(*ends.from_x, x);
      }
    }
    for (auto it = marked.begin(); it != marked.end() && std::next(it) != marked.end(); ++it) {
      out_.pairs.Add(path[*it], path[*std::next(it)]);
    }
  }

  void Declare(VertexId v) {
    if (!original_.contains(v)) declared_.insert(v);
  }

  std::set<VertexId> original_;
  std::set<VertexId> declared_;
  SeparatorOptions options_;
  ReducedPairs out_;
};

}  // namespace

ReducedPairs ReducePairSet(const TerminalGraph& member,
                           const std::vector<VertexId>& terminals,
                           const SeparatorOptions& options) {
  PairReducer reducer(terminals, options);
  reducer.Run(member, terminals, 0);
  return std::move(reducer).Finish();
}

PlanarReachResult SparsifyPlanarReach(const TerminalGraph& g,
                                      const SeparatorOptions& options) {
  if (!g.directed()) throw PreconditionError("expected a directed graph");
  if (!IsPlanar(g)) throw PreconditionError("graph is not planar");
  PlanarReachResult out;
  const ReachSparsifier pre = MinorSparsify(g, TrivialPairSet(g));
  const Decomposition dec = ThorupDecompose(pre.graph);
  out.members = static_cast<int>(dec.members.size());

  std::set<VertexId> declared;
  for (const auto& member : dec.members) {
    ReducedPairs reduced = ReducePairSet(member.graph, member.graph.terminals(), options);
    out.reduced_pairs.Merge(reduced.pairs);
    declared.insert(reduced.new_terminals.begin(), reduced.new_terminals.end());
    if (reduced.degraded > 0) ++out.degraded_members;
    out.oversized_separators += reduced.oversized;
  }
  out.new_terminals = static_cast<int>(declared.size());

  TerminalGraph widened = pre.graph;
  std::vector<VertexId> terms = g.terminals();
  terms.insert(terms.end(), declared.begin(), declared.end());
  widened.SetTerminals(terms);
  ReachSparsifier second = MinorSparsify(widened, out.reduced_pairs);

  second.graph.SetTerminals(g.terminals());
  std::vector<MinorOp> ops = pre.trace.ops;
  ops.insert(ops.end(), second.trace.ops.begin(), second.trace.ops.end());
  out.result.trace.branch_sets = ComputeBranchSets(g, ops);
  out.result.trace.ops = std::move(ops);
  out.result.graph = std::move(second.graph);
  return out;
}

nlohmann::json PlanarReachJson(const PlanarReachResult& r) {
  return {{"members", r.members},
          {"pairs_total", r.reduced_pairs.size()},
          {"new_terminals", r.new_terminals},
          {"degraded_members", r.degraded_members},
          {"oversized_separators", r.oversized_separators},
          {"nonterminals", r.result.graph.num_vertices() - r.result.graph.num_terminals()}};
}

}  // namespace vsparse
