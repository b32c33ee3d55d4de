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

#ifndef VSPARSE_REACH_MINOR_HPP_
#define VSPARSE_REACH_MINOR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "vsparse/minor.hpp"
#include "vsparse/pair_set.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// Unique unit-length shortest paths, closed under taking subpaths.
//
// Among hop-shortest paths, pi(u,v) minimizes the sum of 2^id over its edge
// ids. The perturbed lengths 1 + eps * 2^id have distinct subset sums, so every
// shortest path is unique and every subpath of one is again the selected path.
class TieBreaker {
 public:
  explicit TieBreaker(TerminalGraph g);

  // parent_edge[v] is the last edge of pi(source, v) (kNoEdge when v is the
  // source or unreachable); dist[v] is the hop distance or -1.
  struct Tree {
    std::vector<EdgeId> parent_edge;
    std::vector<int> dist;
  };
  Tree PathsFrom(VertexId source) const;

  // Edge ids of pi(u, v); empty when u == v, nullopt when v is unreachable.
  std::optional<std::vector<EdgeId>> Path(VertexId u, VertexId v) const;

  const TerminalGraph& graph() const { return g_; }

 private:
  TerminalGraph g_;
};

TieBreaker ConsistentTieBreak(const TerminalGraph& g);

struct ReachSparsifier {
  TerminalGraph graph;
  MinorTrace trace;
};

bool IsAcyclic(const TerminalGraph& g);

// Keeps the union of pi(p) over p in pairs, then contracts in-degree-1
// non-terminals into their predecessor (ascending id, to a fixed point).
ReachSparsifier MinorSparsifyDag(const TerminalGraph& g, const PairSet& pairs);

struct SccDecomposition {
  // Reverse topological order: edges between components go from a higher
  // index to a lower one. Members ascending.
  std::vector<std::vector<VertexId>> components;
  std::vector<int> component_of;  // by vertex id, -1 for holes
  // Vertex i stands for components[i]; no parallel edges.
  TerminalGraph condensation;
};

SccDecomposition SccDecompose(const TerminalGraph& g);

// General digraphs: contract non-terminals of terminal SCCs into their SCC,
// contract non-terminal SCCs to single vertices, sparsify the quotient DAG,
// and keep terminal SCCs expanded.
ReachSparsifier MinorSparsify(const TerminalGraph& g, const PairSet& pairs);

struct PreserverOptions {
  // Edges lying on some s->t path for a pair; larger instances are refused.
  int max_relevant_edges = 25;
};

// Minimum-cardinality edge set preserving reachability of every pair; ties go
// to the lexicographically smallest ascending id sequence. Exhaustive.
std::vector<EdgeId> SparsestReachabilityPreserver(
    const TerminalGraph& g, const PairSet& pairs,
    const PreserverOptions& options = {});

// Sparsest preserver, then drops isolated non-terminals and contracts
// in-degree-1 non-terminals.
ReachSparsifier MinorSparsifyDag2(const TerminalGraph& g, const PairSet& pairs,
                                  const PreserverOptions& options = {});

// Sum over vertices of C(indeg, 2).
std::int64_t CountBranchingEvents(const TerminalGraph& g);

// {pairs, nonterminals, branching_events, trace_len}
nlohmann::json ReachResultJson(const PairSet& pairs,
                               const ReachSparsifier& result);

}  // namespace vsparse

#endif  // VSPARSE_REACH_MINOR_HPP_
