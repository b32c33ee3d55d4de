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

#include "vsparse/errors.hpp"
#include "vsparse/os_pipeline.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {

std::string_view SparsifierModeName(SparsifierMode mode) {
  switch (mode) {
    case SparsifierMode::kCut:
      return "cut";
    case SparsifierMode::kDistance:
      return "distance";
    case SparsifierMode::kFlow:
      return "flow";
  }
  return "";
}

std::optional<SparsifierMode> ParseSparsifierMode(std::string_view name) {
  for (auto mode : {SparsifierMode::kCut, SparsifierMode::kDistance, SparsifierMode::kFlow}) {
    if (SparsifierModeName(mode) == name) return mode;
  }
  return std::nullopt;
}

RewriteMode RewriteModeFor(SparsifierMode mode) {
  return mode == SparsifierMode::kDistance ? RewriteMode::kDistance : RewriteMode::kCut;
}

Rational HeavyWeight(const TerminalGraph& g, RewriteMode mode) {
  return mode == RewriteMode::kCut ? g.TotalWeight() + Rational(1) : Rational(0);
}

SplitResult SplitVertices(const TerminalGraph& g, const Rational& heavy,
                          int max_terminal_degree) {
  if (g.directed()) throw PreconditionError("vertex splitting needs an undirected graph");
  // An apex joined to every terminal is planar exactly when the terminals
  // share a face; its edge marks that face at each terminal.
  TerminalGraph apexed = g;
  const VertexId apex = apexed.AddVertex();
  std::vector<EdgeId> apex_edge(g.vertex_bound(), kNoEdge);
  for (VertexId t : g.terminals()) apex_edge[t] = apexed.AddEdge(apex, t, Rational(0));
  const auto rotation = PlanarEmbedding(apexed);
  if (!rotation) {
    throw PreconditionError(IsPlanar(g) ? "terminals do not share a face"
                                        : "graph is not planar");
  }

  SplitResult out;
  out.graph = TerminalGraph(false, g.role());
  // Copy of vertex v that carries edge e.
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> carrier(g.vertex_bound());
  std::vector<VertexId> representative(g.vertex_bound(), kNoVertex);
  for (VertexId v : g.Vertices()) {
    const int limit = g.IsTerminal(v) ? max_terminal_degree : 3;
    std::vector<EdgeId> order;
    for (EdgeId e : (*rotation)[v]) {
      if (e != apex_edge[v]) order.push_back(e);
    }
    if (apex_edge[v] != kNoEdge) {
      // Start right after the terminal face.
      const auto& rot = (*rotation)[v];
      const auto at = std::find(rot.begin(), rot.end(), apex_edge[v]) - rot.begin();
      order.clear();
      for (std::size_t i = 1; i < rot.size(); ++i) order.push_back(rot[(at + i) % rot.size()]);
    }
    if (static_cast<int>(order.size()) <= limit) {
      const VertexId copy = out.graph.AddVertex();
      out.origin.push_back(v);
      representative[v] = copy;
      for (EdgeId e : order) carrier[v].emplace_back(e, copy);
      continue;
    }
    VertexId previous = kNoVertex;
    for (EdgeId e : order) {
      const VertexId copy = out.graph.AddVertex();
      out.origin.push_back(v);
      if (representative[v] == kNoVertex) representative[v] = copy;
      if (previous != kNoVertex) out.graph.AddEdge(previous, copy, heavy);
      carrier[v].emplace_back(e, copy);
      previous = copy;
    }
  }
  auto copy_of = [&](VertexId v, EdgeId e) {
    for (const auto& [edge, copy] : carrier[v]) {
      if (edge == e) return copy;
    }
    return representative[v];
  };
  for (EdgeId e : g.Edges()) {
    const Edge& edge = g.edge(e);
    out.graph.AddEdge(copy_of(edge.tail, e), copy_of(edge.head, e), edge.weight);
  }
  std::vector<VertexId> terminals;
  for (VertexId t : g.terminals()) terminals.push_back(representative[t]);
  out.graph.SetTerminals(terminals);
  return out;
}

}  // namespace vsparse
