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

#ifndef VSPARSE_TERMINAL_GRAPH_HPP_
#define VSPARSE_TERMINAL_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vsparse/rational.hpp"

namespace vsparse {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// What the edge weights mean. kNone graphs carry weight 1 on every edge.
enum class WeightRole { kCapacity, kLength, kNone };

std::string_view WeightRoleName(WeightRole role);  // "cut" | "length" | "none"

struct Edge {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  Rational weight;
};

struct GridPoint {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// A graph with stable vertex and edge ids and an ordered terminal list.
//
// Ids are never reused: deleting a vertex or edge leaves a hole. Undirected
// edges are stored once; `tail`/`head` is then only the insertion order.
// Parallel edges are representable; self-loops are not.
class TerminalGraph {
 public:
  TerminalGraph() = default;
  TerminalGraph(bool directed, WeightRole role);
  static TerminalGraph WithVertices(bool directed, WeightRole role, int n);

  bool directed() const { return directed_; }
  WeightRole role() const { return role_; }

  // --- mutation -----------------------------------------------------------
  VertexId AddVertex();
  // `id` must never have been used in this graph.
  void AddVertexWithId(VertexId id);
  EdgeId AddEdge(VertexId tail, VertexId head, Rational weight);
  // `id` must never have been used in this graph.
  void AddEdgeWithId(EdgeId id, VertexId tail, VertexId head, Rational weight);
  void RemoveEdge(EdgeId e);
  // Removes the vertex and its incident edges. Terminals cannot be removed.
  void RemoveVertex(VertexId v);
  // Merges the endpoints of `e`; other edges between them become self-loops
  // and are dropped. Survivor: the terminal endpoint if exactly one is a
  // terminal, else the lower id; `keep` overrides this when it is an endpoint
  // and no terminal would be lost. Throws when both endpoints are terminals.
  VertexId Contract(EdgeId e, VertexId keep = kNoVertex);
  void SetWeight(EdgeId e, Rational weight);
  void SetTerminals(std::vector<VertexId> terminals);
  void SetCoord(VertexId v, GridPoint p);
  void ClearCoords();

  // --- queries ------------------------------------------------------------
  bool HasVertex(VertexId v) const;
  bool HasEdge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;
  const Rational& weight(EdgeId e) const { return edge(e).weight; }
  VertexId Other(EdgeId e, VertexId v) const;

  // Every live edge touching v, ascending by edge id.
  std::span<const EdgeId> Incident(VertexId v) const;
  std::vector<EdgeId> OutEdges(VertexId v) const;
  std::vector<EdgeId> InEdges(VertexId v) const;
  // Undirected: all edges joining u and v. Directed: edges u -> v only.
  std::vector<EdgeId> EdgesBetween(VertexId u, VertexId v) const;
  std::vector<VertexId> Neighbors(VertexId v) const;  // sorted, unique
  int Degree(VertexId v) const;
  int InDegree(VertexId v) const;
  int OutDegree(VertexId v) const;

  std::vector<VertexId> Vertices() const;  // ascending
  std::vector<EdgeId> Edges() const;       // ascending
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return num_edges_; }
  VertexId vertex_bound() const { return static_cast<VertexId>(alive_.size()); }
  EdgeId edge_bound() const { return static_cast<EdgeId>(edges_.size()); }

  const std::vector<VertexId>& terminals() const { return terminals_; }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  bool IsTerminal(VertexId v) const;
  // Position of v in terminals(), or -1.
  int TerminalIndex(VertexId v) const;

  std::optional<GridPoint> coord(VertexId v) const;
  bool HasAllCoords() const;

  Rational TotalWeight() const;

 private:
  void CheckVertex(VertexId v) const;
  void CheckEdge(EdgeId e) const;
  void EnsureVertexSlot(VertexId v);
  void Detach(EdgeId e, VertexId v);

  bool directed_ = true;
  WeightRole role_ = WeightRole::kNone;
  std::vector<char> alive_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::optional<Edge>> edges_;
  std::vector<int> terminal_pos_;
  std::vector<VertexId> terminals_;
  std::vector<std::optional<GridPoint>> coords_;
  int num_vertices_ = 0;
  int num_edges_ = 0;
};

// Copy of g with vertex ids renumbered 0..n-1 preserving order, and edge ids
// renumbered 0..m-1 preserving order. The second member maps old vertex ids
// to new ones (kNoVertex for holes).
std::pair<TerminalGraph, std::vector<VertexId>> Compacted(
    const TerminalGraph& g);

// Subgraph induced by `keep` (ids preserved). Terminals outside `keep` are
// dropped from the terminal list.
TerminalGraph InducedSubgraph(const TerminalGraph& g,
                              const std::vector<VertexId>& keep);

}  // namespace vsparse

#endif  // VSPARSE_TERMINAL_GRAPH_HPP_
