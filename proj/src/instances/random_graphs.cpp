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
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "vsparse/errors.hpp"
#include "vsparse/instances.hpp"

namespace vsparse {
namespace {

// k distinct entries of `pool`, ascending.
std::vector<VertexId> Sample(std::vector<VertexId> pool, int k, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Rational RandomWeight(std::mt19937_64& rng, int max_den) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, max_den);
  const int a = num(rng);
  return Rational(a, den(rng));
}

TerminalGraph PlanarDigraph(const DigraphParams& p, std::mt19937_64& rng) {
  const int rows = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(p.n))));
  const int cols = rows == 0 ? 0 : (p.n + rows - 1) / rows;
  std::vector<std::pair<VertexId, VertexId>> candidates;
  std::vector<int> present_neighbors(p.n, 0);
  for (int i = 0; i < p.n; ++i) {
    if ((i % cols) + 1 < cols && i + 1 < p.n) candidates.emplace_back(i, i + 1);
    if (i + cols < p.n) candidates.emplace_back(i, i + cols);
  }
  for (const auto& [a, b] : candidates) {
    ++present_neighbors[a];
    ++present_neighbors[b];
  }
  if (p.m > static_cast<int>(candidates.size())) {
    throw PreconditionError("m exceeds the " + std::to_string(candidates.size()) +
                            " edges of the planar host grid");
  }
  std::vector<VertexId> boundary;
  for (int i = 0; i < p.n; ++i) {
    if (present_neighbors[i] < 4) boundary.push_back(i);
  }
  if (p.k > static_cast<int>(boundary.size())) {
    throw PreconditionError("k exceeds the number of boundary cells");
  }
  std::vector<int> rank(p.n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<int> pick(candidates.size());
  std::iota(pick.begin(), pick.end(), 0);
  std::shuffle(pick.begin(), pick.end(), rng);
  pick.resize(p.m);
  std::sort(pick.begin(), pick.end());

  TerminalGraph g = TerminalGraph::WithVertices(true, WeightRole::kNone, p.n);
  for (int i = 0; i < p.n; ++i) g.SetCoord(i, {i / cols, i % cols});
  std::bernoulli_distribution coin(0.5);
  for (int c : pick) {
    auto [a, b] = candidates[c];
    const bool flip = p.acyclic ? rank[a] > rank[b] : coin(rng);
    if (flip) std::swap(a, b);
    g.AddEdge(a, b, Rational(1));
  }
  g.SetTerminals(Sample(boundary, p.k, rng));
  return g;
}

TerminalGraph GeneralDigraph(const DigraphParams& p, std::mt19937_64& rng) {
  const std::int64_t n = p.n;
  const std::int64_t total = p.acyclic ? n * (n - 1) / 2 : n * (n - 1);
  if (p.m > total) throw PreconditionError("m exceeds the number of possible edges");
  std::vector<int> rank(p.n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::set<std::pair<VertexId, VertexId>> chosen;
  auto admissible = [&](VertexId a, VertexId b) {
    return a != b && (!p.acyclic || rank[a] < rank[b]);
  };
  if (2 * static_cast<std::int64_t>(p.m) <= total) {
    std::uniform_int_distribution<VertexId> pick(0, p.n - 1);
    while (static_cast<int>(chosen.size()) < p.m) {
      const VertexId a = pick(rng);
      const VertexId b = pick(rng);
      if (admissible(a, b)) chosen.emplace(a, b);
    }
  } else {
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId a = 0; a < p.n; ++a) {
      for (VertexId b = 0; b < p.n; ++b) {
        if (admissible(a, b)) all.emplace_back(a, b);
      }
    }
    std::shuffle(all.begin(), all.end(), rng);
    chosen.insert(all.begin(), all.begin() + p.m);
  }
  TerminalGraph g = TerminalGraph::WithVertices(true, WeightRole::kNone, p.n);
  for (const auto& [a, b] : chosen) g.AddEdge(a, b, Rational(1));
  std::vector<VertexId> all_vertices(p.n);
  std::iota(all_vertices.begin(), all_vertices.end(), 0);
  g.SetTerminals(Sample(all_vertices, p.k, rng));
  return g;
}

bool Connected(const TerminalGraph& g) {
  const auto verts = g.Vertices();
  if (verts.empty()) return true;
  std::vector<char> seen(g.vertex_bound(), 0);
  std::vector<VertexId> stack{verts.front()};
  seen[verts.front()] = 1;
  int count = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++count;
    for (EdgeId e : g.Incident(v)) {
      const VertexId w = g.Other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

}  // namespace

TerminalGraph GenRandomDigraph(const DigraphParams& params, std::uint64_t seed) {
  if (params.n < 0 || params.m < 0 || params.k < 0 || params.k > params.n) {
    throw PreconditionError("need 0 <= k <= n and m >= 0");
  }
  std::mt19937_64 rng(seed);
  return params.planar ? PlanarDigraph(params, rng) : GeneralDigraph(params, rng);
}

TerminalGraph GenOsInstance(int n, int k, WeightRole role, std::uint64_t seed) {
  if (role == WeightRole::kNone) throw PreconditionError("OS instances carry weights");
  if (n < 2 || k < 1) throw PreconditionError("need n >= 2 and k >= 1");
  const int rows = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
  const int cols = n / rows;
  std::vector<VertexId> boundary;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (r == 0 || c == 0 || r + 1 == rows || c + 1 == cols) boundary.push_back(r * cols + c);
    }
  }
  if (k > static_cast<int>(boundary.size())) {
    throw PreconditionError("k exceeds the " + std::to_string(boundary.size()) +
                            " boundary vertices of a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " grid");
  }
  std::mt19937_64 rng(seed);
  TerminalGraph g = TerminalGraph::WithVertices(false, role, rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const VertexId v = r * cols + c;
      g.SetCoord(v, {r, c});
      if (c + 1 < cols) g.AddEdge(v, v + 1, RandomWeight(rng, 4));
      if (r + 1 < rows) g.AddEdge(v, v + cols, RandomWeight(rng, 4));
    }
  }
  auto order = g.Edges();
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution drop(1.0 / 3.0);
  for (EdgeId e : order) {
    if (!drop(rng)) continue;
    TerminalGraph trial = g;
    trial.RemoveEdge(e);
    if (Connected(trial)) g = std::move(trial);
  }
  g.SetTerminals(Sample(boundary, k, rng));
  return g;
}

}  // namespace vsparse
