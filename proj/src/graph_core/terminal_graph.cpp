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

#include "vsparse/terminal_graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "vsparse/errors.hpp"

namespace vsparse {

std::string_view WeightRoleName(WeightRole role) {
  switch (role) {
    case WeightRole::kCapacity:
      return "cut";
    case WeightRole::kLength:
      return "length";
    case WeightRole::kNone:
      return "none";
  }
  return "none";
}

TerminalGraph::TerminalGraph(bool directed, WeightRole role)
    : directed_(directed), role_(role) {}

TerminalGraph TerminalGraph::WithVertices(bool directed, WeightRole role,
                                          int n) {
  TerminalGraph g(directed, role);
  for (int i = 0; i < n; ++i) g.AddVertex();
  return g;
}

void TerminalGraph::EnsureVertexSlot(VertexId v) {
  const auto need = static_cast<std::size_t>(v) + 1;
  if (alive_.size() < need) {
    alive_.resize(need, 0);
    incident_.resize(need);
    terminal_pos_.resize(need, -1);
    coords_.resize(need);
  }
}

VertexId TerminalGraph::AddVertex() {
  const VertexId v = vertex_bound();
  EnsureVertexSlot(v);
  alive_[v] = 1;
  ++num_vertices_;
  return v;
}

void TerminalGraph::AddVertexWithId(VertexId id) {
  if (id < 0) throw PreconditionError("negative vertex id");
  if (id < vertex_bound() && alive_[id]) {
    throw PreconditionError("vertex id already in use: " + std::to_string(id));
  }
  EnsureVertexSlot(id);
  alive_[id] = 1;
  ++num_vertices_;
}

EdgeId TerminalGraph::AddEdge(VertexId tail, VertexId head, Rational weight) {
  const EdgeId e = edge_bound();
  AddEdgeWithId(e, tail, head, std::move(weight));
  return e;
}

void TerminalGraph::AddEdgeWithId(EdgeId id, VertexId tail, VertexId head,
                                  Rational weight) {
  CheckVertex(tail);
  CheckVertex(head);
  if (tail == head) throw PreconditionError("self-loop not allowed");
  if (weight.is_negative()) throw PreconditionError("negative weight");
  if (id < 0) throw PreconditionError("negative edge id");
  if (id < edge_bound() && edges_[id].has_value()) {
    throw PreconditionError("edge id already in use: " + std::to_string(id));
  }
  if (static_cast<std::size_t>(id) >= edges_.size()) edges_.resize(id + 1);
  edges_[id] = Edge{tail, head, std::move(weight)};
  for (VertexId v : {tail, head}) {
    auto& inc = incident_[v];
    inc.insert(std::upper_bound(inc.begin(), inc.end(), id), id);
  }
  ++num_edges_;
}

void TerminalGraph::Detach(EdgeId e, VertexId v) {
  auto& inc = incident_[v];
  auto it = std::lower_bound(inc.begin(), inc.end(), e);
  if (it != inc.end() && *it == e) inc.erase(it);
}

void TerminalGraph::RemoveEdge(EdgeId e) {
  CheckEdge(e);
  const Edge& ed = *edges_[e];
  Detach(e, ed.tail);
  Detach(e, ed.head);
  edges_[e].reset();
  --num_edges_;
}

void TerminalGraph::RemoveVertex(VertexId v) {
  CheckVertex(v);
  if (IsTerminal(v)) {
    throw PreconditionError("cannot delete terminal " + std::to_string(v));
  }
  const std::vector<EdgeId> inc(incident_[v].begin(), incident_[v].end());
  for (EdgeId e : inc) RemoveEdge(e);
  alive_[v] = 0;
  coords_[v].reset();
  --num_vertices_;
}

VertexId TerminalGraph::Contract(EdgeId e, VertexId forced) {
  CheckEdge(e);
  const VertexId a = edges_[e]->tail;
  const VertexId b = edges_[e]->head;
  const bool ta = IsTerminal(a);
  const bool tb = IsTerminal(b);
  if (ta && tb) {
    throw PreconditionError("contraction would merge terminals " +
                            std::to_string(a) + " and " + std::to_string(b));
  }
  VertexId keep = std::min(a, b);
  if (ta) keep = a;
  if (tb) keep = b;
  if (forced != kNoVertex) {
    if (forced != a && forced != b) {
      throw PreconditionError("survivor is not an endpoint");
    }
    if ((ta || tb) && forced != keep) {
      throw PreconditionError("survivor would drop a terminal");
    }
    keep = forced;
  }
  const VertexId gone = keep == a ? b : a;

  const std::vector<EdgeId> moving(incident_[gone].begin(),
                                   incident_[gone].end());
  for (EdgeId f : moving) {
    Edge& ed = *edges_[f];
    const VertexId other = ed.tail == gone ? ed.head : ed.tail;
    if (other == keep) {
      RemoveEdge(f);
      continue;
    }
    if (ed.tail == gone) ed.tail = keep;
    if (ed.head == gone) ed.head = keep;
    auto& inc = incident_[keep];
    inc.insert(std::upper_bound(inc.begin(), inc.end(), f), f);
  }
  incident_[gone].clear();
  alive_[gone] = 0;
  coords_[gone].reset();
  --num_vertices_;
  return keep;
}

void TerminalGraph::SetWeight(EdgeId e, Rational weight) {
  CheckEdge(e);
  if (weight.is_negative()) throw PreconditionError("negative weight");
  edges_[e]->weight = std::move(weight);
}

void TerminalGraph::SetTerminals(std::vector<VertexId> terminals) {
  for (VertexId t : terminals_) terminal_pos_[t] = -1;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const VertexId t = terminals[i];
    if (!HasVertex(t)) {
      for (std::size_t j = 0; j < i; ++j) terminal_pos_[terminals[j]] = -1;
      throw PreconditionError("terminal id not a vertex: " +
                              std::to_string(t));
    }
    if (terminal_pos_[t] != -1) {
      for (std::size_t j = 0; j < i; ++j) terminal_pos_[terminals[j]] = -1;
      throw PreconditionError("duplicate terminal: " + std::to_string(t));
    }
    terminal_pos_[t] = static_cast<int>(i);
  }
  terminals_ = std::move(terminals);
}

void TerminalGraph::SetCoord(VertexId v, GridPoint p) {
  CheckVertex(v);
  coords_[v] = p;
}

void TerminalGraph::ClearCoords() {
  for (auto& c : coords_) c.reset();
}

bool TerminalGraph::HasVertex(VertexId v) const {
  return v >= 0 && v < vertex_bound() && alive_[v];
}

bool TerminalGraph::HasEdge(EdgeId e) const {
  return e >= 0 && e < edge_bound() && edges_[e].has_value();
}

void TerminalGraph::CheckVertex(VertexId v) const {
  if (!HasVertex(v)) {
    throw PreconditionError("no such vertex: " + std::to_string(v));
  }
}

void TerminalGraph::CheckEdge(EdgeId e) const {
  if (!HasEdge(e)) throw PreconditionError("no such edge: " + std::to_string(e));
}

const Edge& TerminalGraph::edge(EdgeId e) const {
  CheckEdge(e);
  return *edges_[e];
}

VertexId TerminalGraph::Other(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  return ed.tail == v ? ed.head : ed.tail;
}

std::span<const EdgeId> TerminalGraph::Incident(VertexId v) const {
  CheckVertex(v);
  return incident_[v];
}

std::vector<EdgeId> TerminalGraph::OutEdges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : Incident(v)) {
    if (!directed_ || edges_[e]->tail == v) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> TerminalGraph::InEdges(VertexId v) const {
  std::vector<EdgeId> in;
  for (EdgeId e : Incident(v)) {
    if (!directed_ || edges_[e]->head == v) in.push_back(e);
  }
  return in;
}

std::vector<EdgeId> TerminalGraph::EdgesBetween(VertexId u, VertexId v) const {
  std::vector<EdgeId> out;
  const bool u_smaller = incident_.at(u).size() <= incident_.at(v).size();
  const VertexId scan = u_smaller ? u : v;
  for (EdgeId e : Incident(scan)) {
    const Edge& ed = *edges_[e];
    if (directed_) {
      if (ed.tail == u && ed.head == v) out.push_back(e);
    } else if ((ed.tail == u && ed.head == v) ||
               (ed.tail == v && ed.head == u)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<VertexId> TerminalGraph::Neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : Incident(v)) out.push_back(Other(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int TerminalGraph::Degree(VertexId v) const {
  return static_cast<int>(Incident(v).size());
}

int TerminalGraph::InDegree(VertexId v) const {
  if (!directed_) return Degree(v);
  int d = 0;
  for (EdgeId e : Incident(v)) d += edges_[e]->head == v;
  return d;
}

int TerminalGraph::OutDegree(VertexId v) const {
  if (!directed_) return Degree(v);
  int d = 0;
  for (EdgeId e : Incident(v)) d += edges_[e]->tail == v;
  return d;
}

std::vector<VertexId> TerminalGraph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices_);
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> TerminalGraph::Edges() const {
  std::vector<EdgeId> out;
  out.reserve(num_edges_);
  for (EdgeId e = 0; e < edge_bound(); ++e) {
    if (edges_[e]) out.push_back(e);
  }
  return out;
}

bool TerminalGraph::IsTerminal(VertexId v) const {
  return v >= 0 && v < vertex_bound() && terminal_pos_[v] != -1;
}

int TerminalGraph::TerminalIndex(VertexId v) const {
  return v >= 0 && v < vertex_bound() ? terminal_pos_[v] : -1;
}

std::optional<GridPoint> TerminalGraph::coord(VertexId v) const {
  CheckVertex(v);
  return coords_[v];
}

bool TerminalGraph::HasAllCoords() const {
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    if (alive_[v] && !coords_[v]) return false;
  }
  return num_vertices_ > 0;
}

Rational TerminalGraph::TotalWeight() const {
  Rational total;
  for (const auto& e : edges_) {
    if (e) total += e->weight;
  }
  return total;
}

std::pair<TerminalGraph, std::vector<VertexId>> Compacted(
    const TerminalGraph& g) {
  TerminalGraph out(g.directed(), g.role());
  std::vector<VertexId> map(g.vertex_bound(), kNoVertex);
  for (VertexId v : g.Vertices()) {
    map[v] = out.AddVertex();
    if (auto c = g.coord(v)) out.SetCoord(map[v], *c);
  }
  for (EdgeId e : g.Edges()) {
    const Edge& ed = g.edge(e);
    out.AddEdge(map[ed.tail], map[ed.head], ed.weight);
  }
  std::vector<VertexId> terms;
  for (VertexId t : g.terminals()) terms.push_back(map[t]);
  out.SetTerminals(std::move(terms));
  return {std::move(out), std::move(map)};
}

TerminalGraph InducedSubgraph(const TerminalGraph& g,
                              const std::vector<VertexId>& keep) {
  TerminalGraph out(g.directed(), g.role());
  std::vector<char> in(g.vertex_bound(), 0);
  for (VertexId v : keep) {
    if (!g.HasVertex(v) || in[v]) continue;
    in[v] = 1;
  }
  for (VertexId v = 0; v < g.vertex_bound(); ++v) {
    if (!in[v]) continue;
    out.AddVertexWithId(v);
    if (auto c = g.coord(v)) out.SetCoord(v, *c);
  }
  for (EdgeId e : g.Edges()) {
    const Edge& ed = g.edge(e);
    if (in[ed.tail] && in[ed.head]) {
      out.AddEdgeWithId(e, ed.tail, ed.head, ed.weight);
    }
  }
  std::vector<VertexId> terms;
  for (VertexId t : g.terminals()) {
    if (in[t]) terms.push_back(t);
  }
  out.SetTerminals(std::move(terms));
  return out;
}

}  // namespace vsparse
