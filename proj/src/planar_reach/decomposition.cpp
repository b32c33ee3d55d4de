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
#include <queue>
#include <string>
#include <tuple>

#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/planar_reach.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {
namespace {

// Weak components of the vertices with blocked[v] == 0, each ascending,
// ordered by minimum id.
std::vector<std::vector<VertexId>> WeakComponents(const TerminalGraph& g,
                                                  const std::vector<char>& blocked) {
  std::vector<char> seen(g.vertex_bound(), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.Vertices()) {
    if (seen[s] || blocked[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId e : g.Incident(comp[i])) {
        const VertexId w = g.Other(e, comp[i]);
        if (!seen[w] && !blocked[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Largest weak component among `within` once `blocked` vertices are gone.
int LargestRemaining(const TerminalGraph& g, const std::vector<VertexId>& within,
                     std::vector<char>& blocked, std::vector<int>& stamp, int round) {
  int best = 0;
  std::vector<VertexId> stack;
  for (VertexId s : within) {
    if (blocked[s] || stamp[s] == round) continue;
    int size = 0;
    stamp[s] = round;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (EdgeId e : g.Incident(v)) {
        const VertexId w = g.Other(e, v);
        if (!blocked[w] && stamp[w] != round) {
          stamp[w] = round;
          stack.push_back(w);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

// Search tree inside `comp` (unblocked vertices) from `root`, following edges
// forwards or backwards. Returns vertices in BFS order and parents.
struct SearchTree {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
};

SearchTree BuildTree(const TerminalGraph& g, VertexId root,
                     const std::vector<char>& blocked, bool backward) {
  SearchTree t;
  t.parent.assign(g.vertex_bound(), kNoVertex);
  std::vector<char> seen(g.vertex_bound(), 0);
  seen[root] = 1;
  t.order.push_back(root);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    const VertexId v = t.order[i];
    for (EdgeId e : backward ? g.InEdges(v) : g.OutEdges(v)) {
      const VertexId w = g.Other(e, v);
      if (blocked[w] || seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.order.push_back(w);
    }
  }
  return t;
}

// Dipath (in edge direction) between the tree root and v.
std::vector<VertexId> TreePath(const SearchTree& t, VertexId v, bool backward) {
  std::vector<VertexId> path;
  for (VertexId x = v; x != kNoVertex; x = t.parent[x]) path.push_back(x);
  if (!backward) std::reverse(path.begin(), path.end());
  return path;
}

VertexId PickRoot(const TerminalGraph& g, const std::vector<VertexId>& comp,
                  const std::vector<char>& blocked, bool backward) {
  for (VertexId v : comp) {
    bool has_entry = false;
    for (EdgeId e : backward ? g.OutEdges(v) : g.InEdges(v)) {
      has_entry = has_entry || !blocked[g.Other(e, v)];
    }
    if (!has_entry) return v;
  }
  return comp.front();
}

constexpr std::size_t kCandidatesPerTree = 128;

}  // namespace

Decomposition ThorupDecompose(const TerminalGraph& g) {
  if (!g.directed()) throw PreconditionError("expected a directed graph");
  if (!IsPlanar(g)) throw PreconditionError("graph is not planar");
  Decomposition dec;
  std::vector<int> layer(g.vertex_bound(), -1);
  for (const auto& comp : WeakComponents(g, std::vector<char>(g.vertex_bound(), 0))) {
    std::vector<std::vector<VertexId>> layers;
    std::vector<VertexId> assigned;
    bool backward = false;
    std::vector<VertexId> frontier{comp.front()};
    while (true) {
      std::vector<VertexId> sources = assigned;
      sources.insert(sources.end(), frontier.begin(), frontier.end());
      const auto reach = ReachableFrom(g, sources, backward);
      std::vector<VertexId> next;
      for (VertexId v : comp) {
        if (reach[v] && layer[v] < 0) next.push_back(v);
      }
      if (next.empty()) break;
      for (VertexId v : next) layer[v] = static_cast<int>(layers.size());
      assigned.insert(assigned.end(), next.begin(), next.end());
      layers.push_back(std::move(next));
      frontier.clear();
      backward = !backward;
    }
    if (layers.size() == 1) {
      dec.members.push_back({InducedSubgraph(g, layers[0])});
      continue;
    }
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      std::vector<VertexId> keep = layers[i];
      keep.insert(keep.end(), layers[i + 1].begin(), layers[i + 1].end());
      dec.members.push_back({InducedSubgraph(g, keep)});
    }
  }
  return dec;
}

PathSeparator FindPathSeparator(const TerminalGraph& g,
                                const SeparatorOptions& options) {
  PathSeparator sep;
  const int n = g.num_vertices();
  if (n <= 1) return sep;
  std::vector<char> blocked(g.vertex_bound(), 0);
  std::vector<int> stamp(g.vertex_bound(), 0);
  int round = 0;
  while (true) {
    const auto comps = WeakComponents(g, blocked);
    const std::vector<VertexId>* big = nullptr;
    for (const auto& c : comps) {
      if (2 * static_cast<int>(c.size()) > n &&
          (big == nullptr || c.size() > big->size())) {
        big = &c;
      }
    }
    if (big == nullptr) {
      sep.components = comps;
      break;
    }
    if (static_cast<int>(sep.paths.size()) >= options.path_cap) {
      throw PreconditionError("no path separator with at most " +
                              std::to_string(options.path_cap) + " paths");
    }
    // (unbalanced, largest remaining, length, direction, rank)
    using Key = std::tuple<bool, int, std::size_t, int, std::size_t>;
    std::optional<Key> best_key;
    std::vector<VertexId> best_path;
    for (int dir = 0; dir < 2; ++dir) {
      const bool backward = dir == 1;
      const SearchTree tree =
          BuildTree(g, PickRoot(g, *big, blocked, backward), blocked, backward);
      const std::size_t stride =
          std::max<std::size_t>(1, tree.order.size() / kCandidatesPerTree);
      for (std::size_t rank = 0; rank < tree.order.size(); rank += stride) {
        auto path = TreePath(tree, tree.order[rank], backward);
        for (VertexId v : path) blocked[v] = 1;
        const int rest = LargestRemaining(g, *big, blocked, stamp, ++round);
        for (VertexId v : path) blocked[v] = 0;
        const bool unbalanced = 2 * rest > n;
        const Key key{unbalanced, unbalanced ? rest : 0, path.size(), dir, rank};
        if (!best_key || key < *best_key) {
          best_key = key;
          best_path = std::move(path);
        }
      }
    }
    for (VertexId v : best_path) blocked[v] = 1;
    sep.paths.push_back(std::move(best_path));
  }
  sep.oversized = static_cast<int>(sep.paths.size()) > options.max_paths;
  return sep;
}

PathEndpoints ReachEndpointsOnPath(const TerminalGraph& g,
                                   const std::vector<VertexId>& path,
                                   VertexId x) {
  if (!g.HasVertex(x)) throw PreconditionError("unknown vertex " + std::to_string(x));
  std::vector<char> on_path(g.vertex_bound(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexId v = path[i];
    if (!g.HasVertex(v) || on_path[v]) {
      throw PreconditionError("not a dipath: bad vertex " + std::to_string(v));
    }
    on_path[v] = 1;
    if (i > 0 && g.EdgesBetween(path[i - 1], v).empty()) {
      throw PreconditionError("not a dipath: no edge " + std::to_string(path[i - 1]) +
                              " -> " + std::to_string(v));
    }
  }
  PathEndpoints out;
  const auto fwd = ReachableFrom(g, {x});
  const auto bwd = ReachableFrom(g, {x}, /*backward=*/true);
  for (VertexId v : path) {
    if (fwd[v]) {
      out.to_x = v;
      break;
    }
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (bwd[*it]) {
      out.from_x = *it;
      break;
    }
  }
  return out;
}

}  // namespace vsparse
