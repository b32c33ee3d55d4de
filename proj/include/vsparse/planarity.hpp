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

#ifndef VSPARSE_PLANARITY_HPP_
#define VSPARSE_PLANARITY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// Planarity of the underlying undirected simple graph.
bool IsPlanar(const TerminalGraph& g);

// Combinatorial embedding: for every vertex id, its incident edge ids in
// rotation order (consistent orientation across vertices). Parallel edges
// are placed next to their first representative. nullopt when not planar.
using Rotation = std::vector<std::vector<EdgeId>>;
std::optional<Rotation> PlanarEmbedding(const TerminalGraph& g);

// Vertex pairs whose addition makes the planar graph g connected and
// biconnected while keeping it planar. Throws PreconditionError when g is
// not planar.
std::vector<std::pair<VertexId, VertexId>> BiconnectingEdges(const TerminalGraph& g);

}  // namespace vsparse

#endif  // VSPARSE_PLANARITY_HPP_
