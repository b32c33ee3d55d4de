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

#ifndef VSPARSE_PLANAR_REACH_HPP_
#define VSPARSE_PLANAR_REACH_HPP_

#include <optional>
#include <vector>

#include "json.hpp"
#include "vsparse/minor.hpp"
#include "vsparse/pair_set.hpp"
#include "vsparse/reach_minor.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// One member of a layered decomposition. Vertex and edge ids are those of the
// decomposed graph, so the map back to it is the identity.
struct DecompositionMember {
  TerminalGraph graph;
};

struct Decomposition {
  std::vector<DecompositionMember> members;
};

// Per weak component, rooted at its minimum id: layer 0 is the root, odd
// layers add what earlier layers reach, even layers add what reaches earlier
// layers. Every dipath lies inside two consecutive layers, and member i is the
// subgraph induced by layers i and i+1 (a lone root forms its own member).
// Throws PreconditionError on non-planar input.
Decomposition ThorupDecompose(const TerminalGraph& g);

struct SeparatorOptions {
  int max_paths = 6;  // more paths are accepted with a warning
  int path_cap = 64;  // beyond this the separator search gives up
};

struct PathSeparator {
  std::vector<std::vector<VertexId>> paths;       // each a dipath of the host
  std::vector<std::vector<VertexId>> components;  // weak components of g - S
  bool oversized = false;                         // paths.size() > max_paths
};

// Greedy separator: while some weak component holds more than half of the
// vertices, remove the tree dipath (forward or backward search tree rooted in
// that component) that minimizes the largest remaining component.
// Throws PreconditionError when path_cap paths do not suffice.
PathSeparator FindPathSeparator(const TerminalGraph& g,
                                const SeparatorOptions& options = {});

struct PathEndpoints {
  std::optional<VertexId> to_x;    // first path vertex reachable from x
  std::optional<VertexId> from_x;  // last path vertex reaching x
};

// `path` lists vertices in dipath order; throws PreconditionError when it is
// not a dipath of g.
PathEndpoints ReachEndpointsOnPath(const TerminalGraph& g,
                                   const std::vector<VertexId>& path,
                                   VertexId x);

struct ReducedPairs {
  PairSet pairs;
  std::vector<VertexId> new_terminals;  // ascending, disjoint from terminals
  int degraded = 0;                     // subproblems that fell back
  int oversized = 0;                    // separators above max_paths
  int max_depth = 0;
};

// Recursive separator-path labelling of one member with terminals `terminals`.
// A subproblem whose separator search fails contributes all ordered pairs of
// its terminals instead.
ReducedPairs ReducePairSet(const TerminalGraph& member,
                           const std::vector<VertexId>& terminals,
                           const SeparatorOptions& options = {});

struct PlanarReachResult {
  ReachSparsifier result;
  PairSet reduced_pairs;  // union over members, on the preprocessed graph
  int members = 0;
  int new_terminals = 0;
  int degraded_members = 0;
  int oversized_separators = 0;
};

// Sparsifies g for all terminal pairs: reachability minor for the trivial pair
// set, decomposition, reduced pair set over terminals plus declared path
// vertices, reachability minor for that pair set, then the declared vertices
// return to non-terminals. Throws PreconditionError on non-planar input.
PlanarReachResult SparsifyPlanarReach(const TerminalGraph& g,
                                      const SeparatorOptions& options = {});

// {members, pairs_total, new_terminals, degraded_members}
nlohmann::json PlanarReachJson(const PlanarReachResult& r);

}  // namespace vsparse

#endif  // VSPARSE_PLANAR_REACH_HPP_
