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
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <list>
#include <set>
#include <stdexcept>

#include "vsparse/errors.hpp"
#include "vsparse/os_pipeline.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {
namespace {

// Records edge paths in a grid and rejects any overlap between them.
class PathRecorder {
 public:
  PathRecorder(GridEmbedding& out, RewriteMode mode) : out_(out), mode_(mode) {}

  void AddVertexPoint(GridPoint p) {
    if (!vertex_points_.insert(p).second) throw std::logic_error("two vertices share a grid point");
  }

  // `weight` is the weight of the whole path.
  void AddPath(const std::vector<GridPoint>& path, const Rational& weight, bool split_weight) {
    const int steps = static_cast<int>(path.size()) - 1;
    if (steps < 1) throw std::logic_error("empty edge path");
    const Rational step_weight =
        split_weight && mode_ == RewriteMode::kDistance ? weight / Rational(steps) : weight;
    for (int i = 0; i < steps; ++i) {
      const auto [it, fresh] = out_.grid.weights.emplace(MakePointPair(path[i], path[i + 1]), step_weight);
      if (!fresh) throw std::logic_error("embedded paths share a grid edge");
    }
    for (int i = 1; i < steps; ++i) {
      if (vertex_points_.count(path[i]) || !interior_points_.insert(path[i]).second) {
        throw std::logic_error("embedded paths share a grid point");
      }
    }
  }

 private:
  GridEmbedding& out_;
  RewriteMode mode_;
  std::set<GridPoint> vertex_points_;
  std::set<GridPoint> interior_points_;
};

// Straight runs from `from` through each corner in turn.
std::vector<GridPoint> Polyline(std::initializer_list<GridPoint> corners) {
  std::vector<GridPoint> out;
  for (GridPoint c : corners) {
    if (out.empty()) {
      out.push_back(c);
      continue;
    }
    GridPoint p = out.back();
    if (p.row != c.row && p.col != c.col) throw std::logic_error("polyline corner is not axis-aligned");
    while (p != c) {
      p.row += (c.row > p.row) - (c.row < p.row);
      p.col += (c.col > p.col) - (c.col < p.col);
      out.push_back(p);
    }
  }
  return out;
}

// ---- coordinates fast path ------------------------------------------------------

GridEmbedding EmbedByCoordinates(const TerminalGraph& g, RewriteMode mode) {
  GridEmbedding out;
  out.fast_path = true;
  out.vertex_point.assign(g.vertex_bound(), std::nullopt);
  out.terminal_paths.resize(g.num_terminals());
  if (g.num_vertices() == 0) return out;
  int min_row = INT32_MAX, max_row = INT32_MIN, min_col = INT32_MAX, max_col = INT32_MIN;
  for (VertexId v : g.Vertices()) {
    const GridPoint p = *g.coord(v);
    min_row = std::min(min_row, p.row);
    max_row = std::max(max_row, p.row);
    min_col = std::min(min_col, p.col);
    max_col = std::max(max_col, p.col);
  }
  const int rows = max_row - min_row + 1;
  const int cols = max_col - min_col + 1;
  const int n = std::max(rows, cols);
  out.grid.size = n;
  // The last row and column move onto the far side of the square.
  auto stretch = [n](int offset, int extent) {
    if (extent == 1) return 1;
    return offset == extent - 1 ? n : offset + 1;
  };
  PathRecorder recorder(out, mode);
  for (VertexId v : g.Vertices()) {
    const GridPoint p = *g.coord(v);
    const GridPoint q{stretch(p.row - min_row, rows), stretch(p.col - min_col, cols)};
    out.vertex_point[v] = q;
    recorder.AddVertexPoint(q);
  }
  for (EdgeId e : g.Edges()) {
    const Edge& edge = g.edge(e);
    auto path = Polyline({*out.vertex_point[edge.tail], *out.vertex_point[edge.head]});
    recorder.AddPath(path, edge.weight, true);
    out.edge_paths.emplace(e, std::move(path));
  }
  for (int i = 0; i < g.num_terminals(); ++i) {
    const GridPoint p = *out.vertex_point[g.terminals()[i]];
    out.grid.terminals[p] = i;
    out.terminal_paths[i] = {p};
  }
  return out;
}

// ---- visibility layout ------------------------------------------------------------

struct Faces {
  std::vector<int> of_dart;  // dart 2e from tail, 2e+1 from head
  int count = 0;
};

Faces TraceFaces(const TerminalGraph& g, const Rotation& rotation) {
  std::vector<std::vector<std::pair<EdgeId, int>>> position(g.vertex_bound());
  std::vector<int> pos_at_tail(g.edge_bound(), -1), pos_at_head(g.edge_bound(), -1);
  for (VertexId v : g.Vertices()) {
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      const EdgeId e = rotation[v][i];
      (g.edge(e).tail == v ? pos_at_tail : pos_at_head)[e] = i;
    }
  }
  Faces faces;
  faces.of_dart.assign(2 * g.edge_bound(), -1);
  for (EdgeId e0 : g.Edges()) {
    for (int side = 0; side < 2; ++side) {
      if (faces.of_dart[2 * e0 + side] != -1) continue;
      int dart = 2 * e0 + side;
      while (faces.of_dart[dart] == -1) {
        faces.of_dart[dart] = faces.count;
        const EdgeId e = dart / 2;
        const VertexId to = dart % 2 == 0 ? g.edge(e).head : g.edge(e).tail;
        const auto& rot = rotation[to];
        const int at = g.edge(e).tail == to ? pos_at_tail[e] : pos_at_head[e];
        const EdgeId f = rot[(at + 1) % rot.size()];
        dart = 2 * f + (g.edge(f).tail == to ? 0 : 1);
      }
      ++faces.count;
    }
  }
  return faces;
}

GridEmbedding EmbedByVisibility(const TerminalGraph& g, RewriteMode mode, const Rational& heavy) {
  for (VertexId v : g.Vertices()) {
    const int limit = g.IsTerminal(v) ? 2 : 3;
    if (g.Degree(v) > limit) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.Degree(v)) + "; split vertices first");
    }
  }
  GridEmbedding out;
  out.vertex_point.assign(g.vertex_bound(), std::nullopt);
  out.terminal_paths.resize(g.num_terminals());
  if (g.num_vertices() == 0) return out;

  // An apex below everything carries the terminals to the boundary row.
  TerminalGraph aug = g;
  const VertexId apex = aug.AddVertex();
  std::vector<EdgeId> apex_edge(g.num_terminals(), kNoEdge);
  for (int i = 0; i < g.num_terminals(); ++i) {
    apex_edge[i] = aug.AddEdge(apex, g.terminals()[i], Rational(0));
  }
  if (g.num_terminals() == 0) aug.AddEdge(apex, g.Vertices().front(), Rational(0));
  for (const auto& [a, b] : BiconnectingEdges(aug)) aug.AddEdge(a, b, Rational(0));
  const auto rotation = PlanarEmbedding(aug);
  if (!rotation) throw PreconditionError("terminals do not share a face");

  const EdgeId st_edge = (*rotation)[apex].front();
  const VertexId top = aug.Other(st_edge, apex);
  const std::vector<int> st = StNumbering(aug, apex, top);
  const Faces faces = TraceFaces(aug, *rotation);

  // Dual nodes: faces, then the left and right outer regions.
  const int left_outer = faces.count;
  const int right_outer = faces.count + 1;
  const int outer = faces.of_dart[2 * st_edge + (aug.edge(st_edge).tail == top ? 0 : 1)];
  std::vector<int> left(aug.edge_bound(), -1), right(aug.edge_bound(), -1);
  for (EdgeId e : aug.Edges()) {
    const bool up = st[aug.edge(e).tail] < st[aug.edge(e).head];
    right[e] = faces.of_dart[2 * e + (up ? 0 : 1)];
    left[e] = faces.of_dart[2 * e + (up ? 1 : 0)];
    if (e == st_edge) {
      left[e] = left_outer;
      if (right[e] == outer) right[e] = right_outer;
      continue;
    }
    if (right[e] == outer) right[e] = right_outer;
    if (left[e] == outer) throw std::logic_error("outer face on both sides of the st-graph");
  }
  std::vector<std::vector<int>> dual(faces.count + 2);
  std::vector<int> indegree(faces.count + 2, 0);
  for (EdgeId e : aug.Edges()) {
    dual[left[e]].push_back(right[e]);
    ++indegree[right[e]];
  }
  std::vector<int> column(faces.count + 2, 0);
  std::deque<int> ready;
  for (int f = 0; f < faces.count + 2; ++f) {
    if (indegree[f] == 0) ready.push_back(f);
  }
  int settled = 0;
  while (!ready.empty()) {
    const int f = ready.front();
    ready.pop_front();
    ++settled;
    for (int h : dual[f]) {
      column[h] = std::max(column[h], column[f] + 1);
      if (--indegree[h] == 0) ready.push_back(h);
    }
  }
  if (settled != faces.count + 2) throw std::logic_error("dual of the st-graph is cyclic");
  auto edge_column = [&](EdgeId e) { return column[left[e]] + 1; };

  // A vertex sits where an in-edge and an out-edge meet, else at its middle
  // attachment; every other attachment is then alone on its side.
  std::vector<std::vector<EdgeId>> real_edges(aug.vertex_bound());
  for (EdgeId e : g.Edges()) {
    real_edges[g.edge(e).tail].push_back(e);
    real_edges[g.edge(e).head].push_back(e);
  }
  for (int i = 0; i < g.num_terminals(); ++i) real_edges[g.terminals()[i]].push_back(apex_edge[i]);
  PathRecorder recorder(out, mode);
  const int width = column[right_outer];
  out.grid.size = std::max(width, aug.num_vertices());
  for (VertexId v : g.Vertices()) {
    std::vector<int> cols;
    for (EdgeId e : real_edges[v]) cols.push_back(edge_column(e));
    if (cols.empty()) {
      for (EdgeId e : aug.Incident(v)) cols.push_back(edge_column(e));
    }
    std::sort(cols.begin(), cols.end());
    int at = cols[(cols.size() - 1) / 2];
    for (std::size_t i = 1; i < cols.size(); ++i) {
      if (cols[i] == cols[i - 1]) at = cols[i];
    }
    out.vertex_point[v] = GridPoint{st[v], at};
    recorder.AddVertexPoint(*out.vertex_point[v]);
  }
  for (EdgeId e : g.Edges()) {
    const Edge& edge = g.edge(e);
    const GridPoint a = *out.vertex_point[edge.tail];
    const GridPoint b = *out.vertex_point[edge.head];
    const int c = edge_column(e);
    auto path = Polyline({a, GridPoint{a.row, c}, GridPoint{b.row, c}, b});
    recorder.AddPath(path, edge.weight, true);
    out.edge_paths.emplace(e, std::move(path));
  }
  for (int i = 0; i < g.num_terminals(); ++i) {
    const GridPoint p = *out.vertex_point[g.terminals()[i]];
    const int c = edge_column(apex_edge[i]);
    auto path = Polyline({GridPoint{st[apex], c}, GridPoint{p.row, c}, p});
    recorder.AddPath(path, heavy, false);
    out.grid.terminals[path.front()] = i;
    out.terminal_paths[i] = std::move(path);
  }
  return out;
}

}  // namespace

PointPair MakePointPair(GridPoint a, GridPoint b) {
  return a < b ? PointPair{a, b} : PointPair{b, a};
}

bool GridGraph::OnBoundary(GridPoint p) const {
  return p.row == 1 || p.col == 1 || p.row == size || p.col == size;
}

std::vector<int> StNumbering(const TerminalGraph& g, VertexId s, VertexId t) {
  if (g.directed()) throw PreconditionError("st-numbering needs an undirected graph");
  if (g.EdgesBetween(s, t).empty()) throw PreconditionError("s and t must be adjacent");
  const int n = g.num_vertices();
  std::vector<int> pre(g.vertex_bound(), -1);
  std::vector<VertexId> parent(g.vertex_bound(), kNoVertex);
  std::vector<EdgeId> parent_edge(g.vertex_bound(), kNoEdge);
  std::vector<VertexId> low(g.vertex_bound(), kNoVertex);
  std::vector<VertexId> preorder;
  // Iterative depth-first search from s whose first tree edge is (s, t).
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  pre[s] = 0;
  preorder.push_back(s);
  pre[t] = 1;
  preorder.push_back(t);
  parent[t] = s;
  parent_edge[t] = g.EdgesBetween(s, t).front();
  stack.push_back({s, 0});
  stack.push_back({t, 0});
  std::vector<std::vector<VertexId>> children(g.vertex_bound());
  children[s].push_back(t);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto incident = g.Incident(top.v);
    if (top.next == incident.size()) {
      stack.pop_back();
      continue;
    }
    const EdgeId e = incident[top.next++];
    const VertexId w = g.Other(e, top.v);
    if (pre[w] != -1) continue;
    pre[w] = static_cast<int>(preorder.size());
    preorder.push_back(w);
    parent[w] = top.v;
    parent_edge[w] = e;
    children[top.v].push_back(w);
    stack.push_back({w, 0});
  }
  if (static_cast<int>(preorder.size()) != n) throw PreconditionError("graph is not connected");
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const VertexId v = *it;
    VertexId best = v;
    for (EdgeId e : g.Incident(v)) {
      if (e == parent_edge[v]) continue;
      const VertexId w = g.Other(e, v);
      if (pre[w] < pre[best]) best = w;
    }
    for (VertexId c : children[v]) {
      if (pre[low[c]] < pre[best]) best = low[c];
    }
    low[v] = best;
  }
  std::list<VertexId> order{s, t};
  std::vector<std::list<VertexId>::iterator> where(g.vertex_bound());
  where[s] = order.begin();
  where[t] = std::next(order.begin());
  std::vector<char> minus(g.vertex_bound(), 0);
  minus[s] = 1;
  for (std::size_t i = 2; i < preorder.size(); ++i) {
    const VertexId v = preorder[i];
    const VertexId p = parent[v];
    if (minus[low[v]]) {
      where[v] = order.insert(where[p], v);
      minus[p] = 0;
    } else {
      where[v] = order.insert(std::next(where[p]), v);
      minus[p] = 1;
    }
  }
  std::vector<int> number(g.vertex_bound(), 0);
  int next = 1;
  for (VertexId v : order) number[v] = next++;
  for (VertexId v : g.Vertices()) {
    if (v == s || v == t) continue;
    bool lower = false, higher = false;
    for (VertexId w : g.Neighbors(v)) {
      lower |= number[w] < number[v];
      higher |= number[w] > number[v];
    }
    if (!lower || !higher) throw PreconditionError("graph is not biconnected");
  }
  return number;
}

bool HasGridCoordinates(const TerminalGraph& g) {
  if (g.directed() || !g.HasAllCoords()) return false;
  std::set<GridPoint> seen;
  int min_row = INT32_MAX, max_row = INT32_MIN, min_col = INT32_MAX, max_col = INT32_MIN;
  for (VertexId v : g.Vertices()) {
    const GridPoint p = *g.coord(v);
    if (!seen.insert(p).second) return false;
    min_row = std::min(min_row, p.row);
    max_row = std::max(max_row, p.row);
    min_col = std::min(min_col, p.col);
    max_col = std::max(max_col, p.col);
  }
  std::set<PointPair> edges;
  for (EdgeId e : g.Edges()) {
    const GridPoint a = *g.coord(g.edge(e).tail);
    const GridPoint b = *g.coord(g.edge(e).head);
    if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) return false;
    if (!edges.insert(MakePointPair(a, b)).second) return false;
  }
  for (VertexId t : g.terminals()) {
    const GridPoint p = *g.coord(t);
    if (p.row != min_row && p.row != max_row && p.col != min_col && p.col != max_col) return false;
  }
  return true;
}

GridEmbedding OrthogonalGridEmbed(const TerminalGraph& g, RewriteMode mode, const Rational& heavy) {
  if (g.directed()) throw PreconditionError("grid embedding needs an undirected graph");
  if (HasGridCoordinates(g)) return EmbedByCoordinates(g, mode);
  return EmbedByVisibility(g, mode, heavy);
}

TerminalGraph GridToGraph(const GridGraph& grid, WeightRole role, const Rational& pad) {
  const int n = grid.size;
  TerminalGraph g = TerminalGraph::WithVertices(false, role, n * n);
  auto id = [n](GridPoint p) { return (p.row - 1) * n + (p.col - 1); };
  auto weight = [&](GridPoint a, GridPoint b) {
    const auto it = grid.weights.find(MakePointPair(a, b));
    return it == grid.weights.end() ? pad : it->second;
  };
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const GridPoint p{r, c};
      g.SetCoord(id(p), GridPoint{r - 1, c - 1});
      if (c < n) g.AddEdge(id(p), id({r, c + 1}), weight(p, {r, c + 1}));
      if (r < n) g.AddEdge(id(p), id({r + 1, c}), weight(p, {r + 1, c}));
    }
  }
  std::vector<VertexId> terminals(grid.terminals.size(), kNoVertex);
  for (const auto& [p, pos] : grid.terminals) terminals.at(pos) = id(p);
  g.SetTerminals(terminals);
  return g;
}

}  // namespace vsparse
