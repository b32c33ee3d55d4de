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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "test_support.hpp"
#include "vsparse/errors.hpp"
#include "vsparse/graph_io.hpp"
#include "vsparse/instances.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/os_pipeline.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {
namespace {

using testing::RandomRational;

void ExpectEquivalent(const TerminalGraph& g, const TerminalGraph& h, EquivalenceMode mode) {
  const EquivalenceReport report = CompareGraphs(g, h, mode);
  EXPECT_TRUE(report.pass()) << report.ToJson().dump();
}

EquivalenceMode EquivalenceFor(RewriteMode mode) {
  return mode == RewriteMode::kCut ? EquivalenceMode::kCut : EquivalenceMode::kDistance;
}

WeightRole RoleFor(RewriteMode mode) {
  return mode == RewriteMode::kCut ? WeightRole::kCapacity : WeightRole::kLength;
}

// Wheel: hub 0, rim 1..r in order, terminals on the rim.
TerminalGraph Wheel(int r, const std::vector<VertexId>& terminals, WeightRole role, std::mt19937_64& rng) {
  TerminalGraph g = TerminalGraph::WithVertices(false, role, r + 1);
  for (int i = 1; i <= r; ++i) {
    g.AddEdge(0, i, RandomRational(rng));
    g.AddEdge(i, i % r + 1, RandomRational(rng));
  }
  g.SetTerminals(terminals);
  return g;
}

// GenOsInstance with coordinates dropped and vertex ids shuffled.
TerminalGraph ScrambledOsInstance(int n, int k, WeightRole role, std::uint64_t seed) {
  const TerminalGraph g = GenOsInstance(n, k, role, seed);
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(g.vertex_bound());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  TerminalGraph h = TerminalGraph::WithVertices(false, role, g.vertex_bound());
  for (EdgeId e : g.Edges()) h.AddEdge(perm[g.edge(e).tail], perm[g.edge(e).head], g.weight(e));
  std::vector<VertexId> terminals;
  for (VertexId t : g.terminals()) terminals.push_back(perm[t]);
  h.SetTerminals(terminals);
  return h;
}

bool Adjacent(GridPoint a, GridPoint b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

// Independent check of a node embedding: distinct vertex points, lattice
// paths between the right endpoints, no point shared between two paths or a
// path interior and a vertex point, terminal paths ending on the boundary.
void ExpectNodeEmbedding(const TerminalGraph& g, const GridEmbedding& emb) {
  const int n = emb.grid.size;
  std::map<GridPoint, std::string> owner;
  auto claim = [&](GridPoint p, const std::string& who) {
    ASSERT_TRUE(p.row >= 1 && p.row <= n && p.col >= 1 && p.col <= n) << who;
    const auto [it, fresh] = owner.emplace(p, who);
    EXPECT_TRUE(fresh) << who << " reuses (" << p.row << "," << p.col << ") of " << it->second;
  };
  for (VertexId v : g.Vertices()) {
    ASSERT_TRUE(emb.vertex_point[v].has_value()) << v;
    claim(*emb.vertex_point[v], "v" + std::to_string(v));
  }
  for (EdgeId e : g.Edges()) {
    const auto& path = emb.edge_paths.at(e);
    ASSERT_GE(path.size(), 2u);
    const auto ends = std::minmax(path.front(), path.back());
    const auto want = std::minmax(*emb.vertex_point[g.edge(e).tail], *emb.vertex_point[g.edge(e).head]);
    EXPECT_EQ(ends, want) << "edge " << e;
    for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(Adjacent(path[i - 1], path[i])) << "edge " << e;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) claim(path[i], "e" + std::to_string(e));
  }
  ASSERT_EQ(static_cast<int>(emb.terminal_paths.size()), g.num_terminals());
  for (int t = 0; t < g.num_terminals(); ++t) {
    const auto& path = emb.terminal_paths[t];
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(path.back(), *emb.vertex_point[g.terminals()[t]]);
    EXPECT_TRUE(emb.grid.OnBoundary(path.front()));
    EXPECT_EQ(emb.grid.terminals.at(path.front()), t);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) claim(path[i], "t" + std::to_string(t));
  }
}

// ---- splitting -------------------------------------------------------------

TEST(SplitVertices, StarHubBecomesHeavyPath) {
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    std::mt19937_64 rng(3);
    TerminalGraph g = TerminalGraph::WithVertices(false, RoleFor(mode), 5);
    for (VertexId leaf = 1; leaf <= 4; ++leaf) g.AddEdge(0, leaf, RandomRational(rng));
    g.SetTerminals({1, 2, 3, 4});
    const Rational heavy = HeavyWeight(g, mode);
    const SplitResult split = SplitVertices(g, heavy);
    EXPECT_EQ(split.graph.num_vertices(), 8);
    EXPECT_EQ(split.graph.num_edges(), 7);
    int rungs = 0;
    for (EdgeId e : split.graph.Edges()) rungs += split.graph.weight(e) == heavy ? 1 : 0;
    EXPECT_GE(rungs, 3);
    for (VertexId v : split.graph.Vertices()) EXPECT_LE(split.graph.Degree(v), 3);
    ExpectEquivalent(g, split.graph, EquivalenceFor(mode));
  }
}

TEST(SplitVertices, SubcubicGraphUnchanged) {
  std::mt19937_64 rng(5);
  TerminalGraph g = Wheel(3, {1, 2, 3}, WeightRole::kCapacity, rng);
  const SplitResult split = SplitVertices(g, HeavyWeight(g, RewriteMode::kCut));
  EXPECT_EQ(SerializeGraph(split.graph), SerializeGraph(CanonicalGraph(g)));
}

TEST(SplitVertices, TerminalDegreeCapAndExactness) {
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      std::mt19937_64 rng(seed);
      const int r = 4 + static_cast<int>(seed % 5);
      TerminalGraph g = Wheel(r, {1, 2, static_cast<VertexId>(r)}, RoleFor(mode), rng);
      const SplitResult split = SplitVertices(g, HeavyWeight(g, mode), 2);
      for (VertexId v : split.graph.Vertices()) {
        EXPECT_LE(split.graph.Degree(v), split.graph.IsTerminal(v) ? 2 : 3);
        EXPECT_EQ(split.graph.IsTerminal(v), g.IsTerminal(split.origin[v]) &&
                                                 split.graph.terminals()[split.graph.TerminalIndex(v)] == v);
      }
      EXPECT_TRUE(IsPlanar(split.graph));
      ExpectEquivalent(g, split.graph, EquivalenceFor(mode));
    }
  }
}

TEST(SplitVertices, RejectsTerminalsOffOneFace) {
  // K4 minus nothing is planar, but a 3x3 grid with the centre and corners as
  // terminals puts the centre on no face with the others' outer face.
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) g.AddEdge(3 * r + c, 3 * r + c + 1, Rational(1));
      if (r + 1 < 3) g.AddEdge(3 * r + c, 3 * r + c + 3, Rational(1));
    }
  }
  g.SetTerminals({0, 2, 4, 6, 8});
  EXPECT_THROW(SplitVertices(g, Rational(100)), PreconditionError);
}

// ---- st-numbering ----------------------------------------------------------

TEST(StNumbering, EveryInnerVertexHasLowerAndHigherNeighbour) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    TerminalGraph g = testing::RandomUndirected(rng, 8 + trial % 6, 0, 0.5, WeightRole::kCapacity);
    // Biconnect by a Hamiltonian cycle.
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const VertexId w = (v + 1) % g.num_vertices();
      if (g.EdgesBetween(v, w).empty()) g.AddEdge(v, w, Rational(1));
    }
    const VertexId s = 0;
    const VertexId t = 1;
    const auto number = StNumbering(g, s, t);
    EXPECT_EQ(number[s], 1);
    EXPECT_EQ(number[t], g.num_vertices());
    std::set<int> seen(number.begin(), number.end());
    EXPECT_EQ(static_cast<int>(seen.size()), g.num_vertices());
    for (VertexId v : g.Vertices()) {
      if (v == s || v == t) continue;
      bool lower = false;
      bool higher = false;
      for (VertexId w : g.Neighbors(v)) {
        lower = lower || number[w] < number[v];
        higher = higher || number[w] > number[v];
      }
      EXPECT_TRUE(lower && higher) << v;
    }
  }
}

TEST(StNumbering, RejectsCutVertex) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 5);
  g.AddEdge(0, 1, Rational(1));
  g.AddEdge(1, 2, Rational(1));
  g.AddEdge(2, 0, Rational(1));
  g.AddEdge(2, 3, Rational(1));
  g.AddEdge(3, 4, Rational(1));
  g.AddEdge(4, 2, Rational(1));
  EXPECT_THROW(StNumbering(g, 0, 1), PreconditionError);
}

// ---- grid embedding ----------------------------------------------------------

TEST(OrthogonalGridEmbed, FourCycleKeepsMincuts) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 4);
  g.AddEdge(0, 1, Rational(2));
  g.AddEdge(1, 2, Rational(3));
  g.AddEdge(2, 3, Rational(5));
  g.AddEdge(3, 0, Rational(7));
  g.SetTerminals({0, 1, 2, 3});
  const GridEmbedding emb = OrthogonalGridEmbed(g, RewriteMode::kCut, HeavyWeight(g, RewriteMode::kCut));
  EXPECT_FALSE(emb.fast_path);
  ExpectNodeEmbedding(g, emb);
  TerminalGraph grid = GridToGraph(emb.grid, WeightRole::kCapacity, Rational(0));
  ExpectEquivalent(g, grid, EquivalenceMode::kCut);
  EXPECT_EQ(TerminalMincut(grid, 0b0001).value, Rational(9));
}

TEST(OrthogonalGridEmbed, VisibilityLayoutIsANodeEmbedding) {
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const int n = 6 + static_cast<int>(seed % 10);
      const int k = 2 + static_cast<int>(seed % 4);
      TerminalGraph g = ScrambledOsInstance(n, k, RoleFor(mode), seed);
      const SplitResult split = SplitVertices(g, HeavyWeight(g, mode), 2);
      const Rational heavy = HeavyWeight(split.graph, mode);
      const GridEmbedding emb = OrthogonalGridEmbed(split.graph, mode, heavy);
      EXPECT_FALSE(emb.fast_path);
      ExpectNodeEmbedding(split.graph, emb);
      const Rational pad = mode == RewriteMode::kCut ? Rational(0) : split.graph.TotalWeight() + 1;
      ExpectEquivalent(g, GridToGraph(emb.grid, RoleFor(mode), pad), EquivalenceFor(mode));
    }
  }
}

TEST(OrthogonalGridEmbed, CoordinatesUseFastPath) {
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      TerminalGraph g = GenOsInstance(6 + static_cast<int>(seed % 20), 2 + static_cast<int>(seed % 4),
                                      RoleFor(mode), seed);
      ASSERT_TRUE(HasGridCoordinates(g));
      const GridEmbedding emb = OrthogonalGridEmbed(g, mode, HeavyWeight(g, mode));
      EXPECT_TRUE(emb.fast_path);
      ExpectNodeEmbedding(g, emb);
      const Rational pad = mode == RewriteMode::kCut ? Rational(0) : g.TotalWeight() + 1;
      ExpectEquivalent(g, GridToGraph(emb.grid, RoleFor(mode), pad), EquivalenceFor(mode));
    }
  }
}

// ---- half-grid -----------------------------------------------------------------

TEST(HalfGridMap, ThreeByThreeExamples) {
  EXPECT_EQ(GridPointToHalfGrid(3, {1, 3}), (GridPoint{1, 1}));
  EXPECT_EQ(GridPointToHalfGrid(3, {2, 2}), (GridPoint{4, 6}));
  HalfGrid hg = GridToHalfGrid(GridGraph{3, {}, {}}, RewriteMode::kCut);
  EXPECT_EQ(hg.size, 9);
}

TEST(HalfGridMap, BoundaryLandsOnDiagonalAndPathsAreLattice) {
  for (int n = 2; n <= 7; ++n) {
    const int size = 4 * n - 3;
    std::set<GridPoint> images;
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        const GridPoint p = GridPointToHalfGrid(n, {r, c});
        EXPECT_TRUE(p.row >= 1 && p.row <= p.col && p.col <= size);
        EXPECT_TRUE(images.insert(p).second);
        const bool boundary = r == 1 || c == 1 || r == n || c == n;
        if (boundary) {
          EXPECT_EQ(p.row, p.col) << n << " " << r << " " << c;
        }
      }
    }
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        for (GridPoint b : {GridPoint{r, c + 1}, GridPoint{r + 1, c}}) {
          if (b.row > n || b.col > n) continue;
          const auto path = GridEdgeToHalfGridPath(n, {r, c}, b);
          ASSERT_GE(path.size(), 2u);
          EXPECT_EQ(path.front(), GridPointToHalfGrid(n, {r, c}));
          EXPECT_EQ(path.back(), GridPointToHalfGrid(n, b));
          for (std::size_t i = 1; i < path.size(); ++i) {
            const GridPoint x = path[i - 1];
            const GridPoint y = path[i];
            const bool diagonal = x.row == x.col && y.row == y.col && std::abs(x.row - y.row) == 1;
            EXPECT_TRUE(Adjacent(x, y) || diagonal);
          }
        }
      }
    }
  }
}

GridGraph RandomBoundaryGrid(std::mt19937_64& rng, int n, int k) {
  GridGraph grid{n, {}, {}};
  std::bernoulli_distribution keep(0.85);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (c < n && keep(rng)) grid.weights[MakePointPair({r, c}, {r, c + 1})] = RandomRational(rng);
      if (r < n && keep(rng)) grid.weights[MakePointPair({r, c}, {r + 1, c})] = RandomRational(rng);
    }
  }
  std::vector<GridPoint> boundary;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (grid.OnBoundary({r, c})) boundary.push_back({r, c});
    }
  }
  std::shuffle(boundary.begin(), boundary.end(), rng);
  for (int t = 0; t < k; ++t) grid.terminals[boundary[t]] = t;
  return grid;
}

TEST(GridToHalfGrid, PreservesTerminalQuantities) {
  std::mt19937_64 rng(17);
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 5;
      const int k = std::min(4 * n - 4, 2 + trial % 4);
      GridGraph grid = RandomBoundaryGrid(rng, n, k);
      Rational total(0);
      for (const auto& [pair, w] : grid.weights) total += w;
      const Rational pad = mode == RewriteMode::kCut ? Rational(0) : total + 1;
      TerminalGraph g = GridToGraph(grid, RoleFor(mode), pad);
      if (mode == RewriteMode::kDistance) {
        // Padding is only inert while the terminals are joined by real edges.
        const auto dist = TerminalDistanceMatrix(g);
        bool joined = true;
        for (const auto& row : dist) {
          for (const auto& d : row) joined = joined && d.finite() && d.value() < pad;
        }
        if (!joined) continue;
      }
      const HalfGrid hg = GridToHalfGrid(grid, mode);
      EXPECT_EQ(hg.size, 4 * n - 3);
      ExpectEquivalent(g, HalfGridToGraph(hg, RoleFor(mode), pad, true), EquivalenceFor(mode));
      ++checked;
    }
    EXPECT_GE(checked, 20);
  }
}

TEST(GridToHalfGrid, RejectsInteriorTerminal) {
  GridGraph grid{3, {}, {{GridPoint{2, 2}, 0}}};
  EXPECT_THROW(GridToHalfGrid(grid, RewriteMode::kCut), PreconditionError);
}

// ---- half-grid reduction ---------------------------------------------------------

HalfGrid RandomHalfGrid(std::mt19937_64& rng, int size, const std::vector<int>& terminal_diagonal) {
  HalfGrid hg;
  hg.size = size;
  for (int i = 1; i <= size; ++i) {
    for (int j = i; j <= size; ++j) {
      if (j < size) hg.weights[MakePointPair({i, j}, {i, j + 1})] = RandomRational(rng);
      if (i < j) hg.weights[MakePointPair({i, j}, {i + 1, j})] = RandomRational(rng);
    }
  }
  for (std::size_t t = 0; t < terminal_diagonal.size(); ++t) hg.terminals[terminal_diagonal[t]] = static_cast<int>(t);
  return hg;
}

void ExpectHalfGridShape(const TerminalGraph& g, const HalfGridLayout& layout) {
  const int s = layout.size();
  EXPECT_EQ(g.num_vertices(), s * (s + 1) / 2);
  std::set<VertexId> cells;
  for (int i = 1; i <= s; ++i) {
    for (int j = i; j <= s; ++j) {
      const VertexId v = layout.at(i, j);
      ASSERT_TRUE(g.HasVertex(v)) << i << "," << j;
      cells.insert(v);
      std::set<VertexId> want;
      if (j < s) want.insert(layout.at(i, j + 1));
      if (j > i) want.insert(layout.at(i, j - 1));
      if (i > 1) want.insert(layout.at(i - 1, j));
      if (i < j) want.insert(layout.at(i + 1, j));
      const auto nbrs = g.Neighbors(v);
      for (VertexId w : nbrs) EXPECT_TRUE(want.count(w)) << i << "," << j;
    }
  }
  EXPECT_EQ(static_cast<int>(cells.size()), g.num_vertices());
}

TEST(EliminateDiagonalVertex, EveryIndexIsExact) {
  std::mt19937_64 rng(23);
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    for (int size = 2; size <= 6; ++size) {
      for (int m = 1; m <= size; ++m) {
        std::vector<int> diag;
        for (int d = 1; d <= size; ++d) {
          if (d != m) diag.push_back(d);
        }
        const HalfGrid hg = RandomHalfGrid(rng, size, diag);
        HalfGridLayout layout;
        const TerminalGraph g = HalfGridToGraph(hg, RoleFor(mode), Rational(0), false, &layout);
        TerminalGraph h = g;
        const auto steps = EliminateDiagonalVertex(h, layout, m);
        EXPECT_EQ(layout.size(), size - 1);
        ExpectHalfGridShape(h, layout);
        ExpectEquivalent(g, h, EquivalenceFor(mode));
        TerminalGraph replay = g;
        ReplaySteps(replay, steps);
        EXPECT_EQ(SerializeGraph(replay), SerializeGraph(h));
      }
    }
  }
}

TEST(GitlerReduce, TwoTerminalToyCollapsesToTriangle) {
  std::mt19937_64 rng(29);
  const HalfGrid hg = RandomHalfGrid(rng, 3, {1, 3});
  const GitlerResult r = GitlerReduce(hg, RewriteMode::kCut, Rational(0));
  EXPECT_EQ(r.k_prime, 3);
  EXPECT_EQ(r.graph.num_vertices(), 6);
}

TEST(GitlerReduce, OutputIsTerminalHalfGridAndReplays) {
  std::mt19937_64 rng(31);
  for (RewriteMode mode : {RewriteMode::kCut, RewriteMode::kDistance}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int size = 5 + trial % 6;
      std::vector<int> diag;
      for (int d = 1; d <= size; ++d) {
        if (std::bernoulli_distribution(0.35)(rng)) diag.push_back(d);
      }
      std::shuffle(diag.begin(), diag.end(), rng);
      HalfGrid hg = RandomHalfGrid(rng, size, diag);
      for (int d = 1; d < size; ++d) {
        if (std::bernoulli_distribution(0.5)(rng)) hg.weights[MakePointPair({d, d}, {d + 1, d + 1})] = RandomRational(rng);
      }
      const Rational pad = mode == RewriteMode::kCut ? Rational(0) : Rational(1000);
      const GitlerResult r = GitlerReduce(hg, mode, pad);
      EXPECT_EQ(r.graph.num_terminals(), r.k_prime);
      EXPECT_EQ(r.graph.num_vertices(), r.k_prime * (r.k_prime + 1) / 2);
      ExpectHalfGridShape(r.graph, r.layout);
      for (int d = 1; d <= r.layout.size(); ++d) EXPECT_TRUE(r.graph.IsTerminal(r.layout.at(d, d)));
      ExpectEquivalent(r.input, r.graph, EquivalenceFor(mode));
      TerminalGraph replay = r.input;
      ReplaySteps(replay, r.steps);
      EXPECT_EQ(SerializeGraph(replay), SerializeGraph(r.graph));
    }
  }
}

// ---- end-to-end --------------------------------------------------------------

TEST(BuildSparsifierOs, TwoTerminalPathBecomesOneEdge) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 4);
  g.AddEdge(0, 1, Rational(3));
  g.AddEdge(1, 2, Rational(2));
  g.AddEdge(2, 3, Rational(5));
  g.SetTerminals({0, 3});
  const OsSparsifier s = BuildSparsifierOs(g, SparsifierMode::kCut);
  EXPECT_EQ(s.graph.num_terminals(), 2);
  EXPECT_LE(s.graph.num_vertices(), OsSizeBound(2));
  ExpectEquivalent(g, s.graph, EquivalenceMode::kCut);
  EXPECT_EQ(TerminalMincut(s.graph, 0b01).value, Rational(2));
}

TEST(BuildSparsifierOs, TrivialTerminalCounts) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kLength, 3);
  g.AddEdge(0, 1, Rational(1));
  g.AddEdge(1, 2, Rational(1));
  g.SetTerminals({1});
  const OsSparsifier s = BuildSparsifierOs(g, SparsifierMode::kDistance);
  EXPECT_EQ(s.graph.num_vertices(), 1);
  EXPECT_EQ(s.graph.num_edges(), 0);
}

TEST(BuildSparsifierOs, RejectsWrongRoleAndDisconnectedDistanceTerminals) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 4);
  g.AddEdge(0, 1, Rational(1));
  g.AddEdge(2, 3, Rational(1));
  g.SetTerminals({0, 2});
  EXPECT_THROW(BuildSparsifierOs(g, SparsifierMode::kDistance), PreconditionError);
  TerminalGraph h = TerminalGraph::WithVertices(false, WeightRole::kLength, 4);
  h.AddEdge(0, 1, Rational(1));
  h.AddEdge(2, 3, Rational(1));
  h.SetTerminals({0, 2});
  EXPECT_THROW(BuildSparsifierOs(h, SparsifierMode::kDistance), PreconditionError);
  h.SetTerminals({0, 1});
  EXPECT_NO_THROW(BuildSparsifierOs(h, SparsifierMode::kDistance));
}

void CheckEndToEnd(const TerminalGraph& g, SparsifierMode mode) {
  const OsSparsifier s = BuildSparsifierOs(g, mode);
  const int k = g.num_terminals();
  EXPECT_EQ(s.graph.num_terminals(), k);
  EXPECT_LE(s.graph.num_vertices(), OsSizeBound(k));
  EXPECT_TRUE(IsPlanar(s.graph));
  const EquivalenceMode eq = mode == SparsifierMode::kCut        ? EquivalenceMode::kCut
                             : mode == SparsifierMode::kDistance ? EquivalenceMode::kDistance
                                                                 : EquivalenceMode::kFlow;
  ExpectEquivalent(g, s.graph, eq);
  const auto log = PipelineLogFromJsonLines(PipelineLogToJsonLines(s.log));
  const LogReplayReport report = ReplayPipelineLog(log);
  EXPECT_TRUE(report.ok) << report.stages.dump();
}

TEST(BuildSparsifierOs, CoordinateInstancesCut) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CheckEndToEnd(GenOsInstance(4 + static_cast<int>(seed % 30), 2 + static_cast<int>(seed % 4),
                                WeightRole::kCapacity, seed),
                  SparsifierMode::kCut);
  }
}

TEST(BuildSparsifierOs, CoordinateInstancesDistance) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CheckEndToEnd(GenOsInstance(4 + static_cast<int>(seed % 30), 2 + static_cast<int>(seed % 4),
                                WeightRole::kLength, seed),
                  SparsifierMode::kDistance);
  }
}

TEST(BuildSparsifierOs, FlowInstances) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CheckEndToEnd(GenOsInstance(4 + static_cast<int>(seed % 12), 2 + static_cast<int>(seed % 3),
                                WeightRole::kCapacity, seed),
                  SparsifierMode::kFlow);
  }
}

TEST(BuildSparsifierOs, GeneralPathWithoutCoordinates) {
  for (SparsifierMode mode : {SparsifierMode::kCut, SparsifierMode::kDistance}) {
    const WeightRole role = mode == SparsifierMode::kCut ? WeightRole::kCapacity : WeightRole::kLength;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      CheckEndToEnd(ScrambledOsInstance(6 + static_cast<int>(seed % 12), 2 + static_cast<int>(seed % 4), role, seed),
                    mode);
      std::mt19937_64 rng(seed);
      const int r = 4 + static_cast<int>(seed % 5);
      CheckEndToEnd(Wheel(r, {1, 2, static_cast<VertexId>(r)}, role, rng), mode);
    }
  }
}

TEST(PipelineLog, TamperedStepFailsReplay) {
  const OsSparsifier s = BuildSparsifierOs(GenOsInstance(9, 3, WeightRole::kCapacity, 7), SparsifierMode::kCut);
  auto log = PipelineLogFromJsonLines(PipelineLogToJsonLines(s.log));
  bool tampered = false;
  for (auto& r : log) {
    if (r.input && !r.steps.empty()) {
      r.output = *r.output + "\n# extra";
      tampered = true;
      break;
    }
  }
  ASSERT_TRUE(tampered);
  EXPECT_FALSE(ReplayPipelineLog(log).ok);
}

TEST(OsSizeBound, Formula) {
  EXPECT_EQ(OsSizeBound(1), 15);
  EXPECT_EQ(OsSizeBound(5), 45);
}

}  // namespace
}  // namespace vsparse
