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
#include <stdexcept>

#include "vsparse/errors.hpp"
#include "vsparse/os_pipeline.hpp"

namespace vsparse {
namespace {

std::vector<GridPoint> Run(std::initializer_list<GridPoint> corners) {
  std::vector<GridPoint> out;
  for (GridPoint c : corners) {
    if (out.empty()) {
      out.push_back(c);
      continue;
    }
    GridPoint p = out.back();
    while (p != c) {
      p.row += (c.row > p.row) - (c.row < p.row);
      p.col += (c.col > p.col) - (c.col < p.col);
      out.push_back(p);
    }
  }
  return out;
}

bool OnGridBoundary(int n, GridPoint p) {
  return p.row == 1 || p.col == 1 || p.row == n || p.col == n;
}

GridPoint Diagonal(int d) { return {d, d}; }

}  // namespace

GridPoint GridPointToHalfGrid(int n, GridPoint p) {
  if (p.row < 1 || p.col < 1 || p.row > n || p.col > n) {
    throw PreconditionError("grid point outside the grid");
  }
  if (n == 1) return {1, 1};
  const int i = p.row;
  const int j = p.col;
  if (i == 1 && j >= 2) return Diagonal(n - j + 1);
  if (j == 1 && i <= n - 1) return Diagonal(n + i - 1);
  if (i == n && j <= n - 1) return Diagonal(2 * n + j - 2);
  if (j == n && i >= 2) return Diagonal(4 * n - i - 2);
  return {n + i - 1, 2 * n + j - 2};
}

std::vector<GridPoint> GridEdgeToHalfGridPath(int n, GridPoint a, GridPoint b) {
  if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) {
    throw PreconditionError("grid points are not adjacent");
  }
  const GridPoint ia = GridPointToHalfGrid(n, a);
  const GridPoint ib = GridPointToHalfGrid(n, b);
  std::vector<GridPoint> path;
  const bool a_boundary = OnGridBoundary(n, a);
  const bool b_boundary = OnGridBoundary(n, b);
  if (a_boundary && b_boundary) {
    if (std::abs(ia.row - ib.row) == 1) {
      path = {ia, ib};
    } else {
      // The edge ((1,n), (2,n)) closes the boundary cycle around the outside.
      const int last = 4 * n - 3;
      path = Run({Diagonal(1), GridPoint{1, last}, GridPoint{last - 1, last}, Diagonal(last - 1)});
    }
  } else if (!a_boundary && !b_boundary) {
    path = {ia, ib};
  } else {
    const GridPoint outer = a_boundary ? a : b;
    const GridPoint inner = a_boundary ? b : a;
    const GridPoint from = GridPointToHalfGrid(n, inner);
    const GridPoint to = GridPointToHalfGrid(n, outer);
    if (outer.col == 1) {
      path = Run({from, to});
    } else if (outer.row == n) {
      path = Run({from, to});
    } else if (outer.row == 1) {
      path = Run({from, GridPoint{to.row, from.col}, to});
    } else {
      path = Run({from, GridPoint{from.row, to.col}, to});
    }
  }
  if (path.front() != ia) std::reverse(path.begin(), path.end());
  return path;
}

HalfGrid GridToHalfGrid(const GridGraph& grid, RewriteMode mode) {
  HalfGrid hg;
  const int n = grid.size;
  hg.size = n <= 1 ? n : 4 * n - 3;
  std::set<GridPoint> interior;
  std::set<GridPoint> images;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) images.insert(GridPointToHalfGrid(n, {r, c}));
  }
  for (const auto& [pair, weight] : grid.weights) {
    const auto path = GridEdgeToHalfGridPath(n, pair.first, pair.second);
    const int steps = static_cast<int>(path.size()) - 1;
    const Rational step = mode == RewriteMode::kDistance ? weight / Rational(steps) : weight;
    for (int i = 0; i < steps; ++i) {
      if (!hg.weights.emplace(MakePointPair(path[i], path[i + 1]), step).second) {
        throw std::logic_error("half-grid paths share an edge");
      }
    }
    for (int i = 1; i < steps; ++i) {
      if (images.count(path[i]) || !interior.insert(path[i]).second) {
        throw std::logic_error("half-grid paths share a point");
      }
    }
  }
  for (const auto& [p, pos] : grid.terminals) {
    if (!OnGridBoundary(n, p)) throw PreconditionError("terminal off the grid boundary");
    hg.terminals[GridPointToHalfGrid(n, p).row] = pos;
  }
  return hg;
}

HalfGridLayout::HalfGridLayout(int size)
    : size_(size), cells_(static_cast<std::size_t>(size) * size, kNoVertex) {}

VertexId HalfGridLayout::at(int i, int j) const {
  if (i < 1 || j > size_ || i > j) throw std::out_of_range("half-grid point out of range");
  return cells_[(i - 1) * size_ + (j - 1)];
}

void HalfGridLayout::set(int i, int j, VertexId v) {
  if (i < 1 || j > size_ || i > j) throw std::out_of_range("half-grid point out of range");
  cells_[(i - 1) * size_ + (j - 1)] = v;
}

void HalfGridLayout::RemoveIndex(int m) {
  HalfGridLayout next(size_ - 1);
  for (int i = 1; i < size_; ++i) {
    for (int j = i; j < size_; ++j) {
      next.set(i, j, at(i + (i >= m), j + (j >= m)));
    }
  }
  *this = std::move(next);
}

TerminalGraph HalfGridToGraph(const HalfGrid& hg, WeightRole role, const Rational& pad,
                              bool with_diagonal, HalfGridLayout* layout) {
  const int n = hg.size;
  TerminalGraph g(false, role);
  HalfGridLayout cells(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) cells.set(i, j, g.AddVertex());
  }
  auto weight = [&](GridPoint a, GridPoint b) {
    const auto it = hg.weights.find(MakePointPair(a, b));
    return it == hg.weights.end() ? pad : it->second;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (j < n) g.AddEdge(cells.at(i, j), cells.at(i, j + 1), weight({i, j}, {i, j + 1}));
      if (i < j) g.AddEdge(cells.at(i, j), cells.at(i + 1, j), weight({i, j}, {i + 1, j}));
    }
    if (with_diagonal && i < n) {
      g.AddEdge(cells.at(i, i), cells.at(i + 1, i + 1), weight({i, i}, {i + 1, i + 1}));
    }
  }
  std::vector<VertexId> terminals(hg.terminals.size(), kNoVertex);
  for (const auto& [d, pos] : hg.terminals) terminals.at(pos) = cells.at(d, d);
  g.SetTerminals(terminals);
  if (layout != nullptr) *layout = std::move(cells);
  return g;
}

}  // namespace vsparse
