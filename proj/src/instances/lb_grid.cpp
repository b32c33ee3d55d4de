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
#include <map>
#include <queue>
#include <set>
#include <string>

#include "vsparse/errors.hpp"
#include "vsparse/instances.hpp"
#include "vsparse/reach_minor.hpp"

namespace vsparse {
namespace {

// Vertices of a dipath s -> t (BFS, lowest edge id first), or empty.
std::vector<VertexId> FindDipath(const TerminalGraph& g, VertexId s, VertexId t) {
  std::vector<VertexId> parent(g.vertex_bound(), kNoVertex);
  std::vector<char> seen(g.vertex_bound(), 0);
  std::queue<VertexId> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty() && !seen[t]) {
    const VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.OutEdges(v)) {
      const VertexId w = g.edge(e).head;
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      q.push(w);
    }
  }
  if (!seen[t]) return {};
  std::vector<VertexId> path;
  for (VertexId v = t; v != kNoVertex; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Number of s -> t dipaths in a DAG, saturating at 2.
int CountDipaths(const TerminalGraph& g, VertexId s, VertexId t) {
  std::map<VertexId, int> memo;
  auto count = [&](auto&& self, VertexId v) -> int {
    if (v == t) return 1;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    int total = 0;
    for (EdgeId e : g.OutEdges(v)) total = std::min(2, total + self(self, g.edge(e).head));
    memo[v] = total;
    return total;
  };
  return count(count, s);
}

void CheckFamilies(const TerminalGraph& h, int side, LbGridReport& report) {
  const auto& terms = h.terminals();
  auto family = [&](int from, int to, const char* name) {
    std::vector<std::vector<VertexId>> paths;
    for (int i = 0; i < side; ++i) {
      auto path = FindDipath(h, terms[from + i], terms[to + i]);
      if (path.empty()) {
        report.problems.push_back(std::string(name) + " path " + std::to_string(i) +
                                  " missing");
      }
      paths.push_back(std::move(path));
    }
    return paths;
  };
  const auto horizontal = family(0, side, "horizontal");
  const auto vertical = family(2 * side, 3 * side, "vertical");
  auto check_disjoint = [&](const std::vector<std::vector<VertexId>>& paths, const char* name) {
    std::map<VertexId, int> owner;
    for (int i = 0; i < side; ++i) {
      for (VertexId v : paths[i]) {
        const auto [it, fresh] = owner.emplace(v, i);
        if (!fresh) {
          report.problems.push_back(std::string(name) + " paths " +
                                    std::to_string(it->second) + " and " +
                                    std::to_string(i) + " share vertex " +
                                    std::to_string(v));
        }
      }
    }
  };
  check_disjoint(horizontal, "horizontal");
  check_disjoint(vertical, "vertical");
  std::set<VertexId> meeting;
  for (int i = 0; i < side; ++i) {
    const std::set<VertexId> on_row(horizontal[i].begin(), horizontal[i].end());
    for (int j = 0; j < side; ++j) {
      std::optional<VertexId> at;
      bool any = false;
      for (VertexId v : vertical[j]) {
        if (!on_row.contains(v)) continue;
        any = true;
        if (!h.IsTerminal(v) && (!at || v < *at)) at = v;
      }
      if (!any && !horizontal[i].empty() && !vertical[j].empty()) {
        report.problems.push_back("horizontal " + std::to_string(i) + " misses vertical " +
                                  std::to_string(j));
      } else if (any && !at) {
        report.problems.push_back("horizontal " + std::to_string(i) + " meets vertical " +
                                  std::to_string(j) + " only at terminals");
      }
      if (at) meeting.insert(*at);
    }
  }
  report.intersections = static_cast<int>(meeting.size());
}

}  // namespace

TerminalGraph GenLbGrid(int k) {
  if (k < 8 || k % 4 != 0) throw PreconditionError("lower-bound grid needs k % 4 == 0 and k >= 8");
  const int r = k / 4;
  auto corner = [r](int row, int col) { return (row == 0 || row == r) && (col == 0 || col == r); };
  auto on_boundary = [r](int row, int col) { return row == 0 || row == r || col == 0 || col == r; };
  std::map<std::pair<int, int>, VertexId> id;
  TerminalGraph g(true, WeightRole::kNone);
  for (int row = 0; row <= r; ++row) {
    for (int col = 0; col <= r; ++col) {
      if (corner(row, col)) continue;
      const VertexId v = g.AddVertex();
      id[{row, col}] = v;
      g.SetCoord(v, {row, col});
    }
  }
  for (int row = 0; row <= r; ++row) {
    for (int col = 0; col <= r; ++col) {
      if (corner(row, col)) continue;
      const std::pair<int, int> right{row, col + 1};
      const std::pair<int, int> down{row + 1, col};
      for (const auto& next : {right, down}) {
        if (next.first > r || next.second > r || corner(next.first, next.second)) continue;
        if (on_boundary(row, col) && on_boundary(next.first, next.second)) continue;
        g.AddEdge(id[{row, col}], id[next], Rational(1));
      }
    }
  }
  std::vector<VertexId> terms;
  for (int i = 1; i < r; ++i) terms.push_back(id[{i, 0}]);
  for (int i = 1; i < r; ++i) terms.push_back(id[{i, r}]);
  for (int j = 1; j < r; ++j) terms.push_back(id[{0, j}]);
  for (int j = 1; j < r; ++j) terms.push_back(id[{r, j}]);
  g.SetTerminals(std::move(terms));
  return g;
}

LbGridReport VerifyLbGrid(const TerminalGraph& g, const TerminalGraph* minor) {
  LbGridReport report;
  const int k = g.num_terminals();
  if (!g.directed() || k == 0 || k % 4 != 0) {
    report.problems.push_back("not a lower-bound grid: terminal count " + std::to_string(k));
    report.ok = false;
    return report;
  }
  const int side = k / 4;
  report.side = side;
  const int r = side + 1;
  if (g.num_vertices() != (r + 1) * (r + 1) - 4) {
    report.problems.push_back("vertex count " + std::to_string(g.num_vertices()));
  }
  if (!IsAcyclic(g)) report.problems.push_back("graph has a directed cycle");
  const auto reach = TerminalReachMatrix(g);
  for (int base : {0, 2 * side}) {
    for (int j = 0; j < side; ++j) {
      for (int i = 0; i < side; ++i) {
        if (reach[base + j][base + side + i] != (i >= j)) {
          report.problems.push_back("reachability from terminal " + std::to_string(base + j) +
                                    " to " + std::to_string(base + side + i));
        }
      }
      const auto& t = g.terminals();
      if (CountDipaths(g, t[base + j], t[base + side + j]) != 1) {
        report.problems.push_back("dipath from terminal " + std::to_string(base + j) +
                                  " is not unique");
      }
    }
  }
  if (minor != nullptr) {
    if (minor->num_terminals() != k) {
      report.problems.push_back("minor has " + std::to_string(minor->num_terminals()) +
                                " terminals");
    } else {
      CheckFamilies(*minor, side, report);
    }
  } else {
    CheckFamilies(g, side, report);
  }
  report.ok = report.problems.empty();
  return report;
}

nlohmann::json LbGridReport::ToJson() const {
  return {{"ok", ok}, {"side", side}, {"intersections", intersections},
          {"required", side * side}, {"problems", problems}};
}

}  // namespace vsparse
