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

#ifndef VSPARSE_TESTS_RULE_SITES_HPP_
#define VSPARSE_TESTS_RULE_SITES_HPP_

#include <utility>
#include <vector>

#include "vsparse/terminal_graph.hpp"
#include "vsparse/wye_delta.hpp"

namespace vsparse::testing {

// Every applicable site of every rule in a random graph, one at a time.
inline std::vector<std::pair<Rule, Site>> AllSites(const TerminalGraph& g) {
  std::vector<std::pair<Rule, Site>> sites;
  const auto vertices = g.Vertices();
  for (VertexId v : vertices) {
    const auto nbrs = g.Neighbors(v);
    const bool inner = !g.IsTerminal(v);
    const bool simple = static_cast<int>(nbrs.size()) == g.Degree(v);
    if (inner && g.Degree(v) <= 1) sites.push_back({Rule::kDegreeOne, {{v}, {}}});
    if (inner && simple && g.Degree(v) == 2) sites.push_back({Rule::kSeries, {{v}, {}}});
    if (inner && simple && g.Degree(v) == 3) sites.push_back({Rule::kWyeDelta, {{v}, {}}});
    for (VertexId a : nbrs) {
      if (a > v && g.EdgesBetween(v, a).size() >= 2) sites.push_back({Rule::kParallel, {{v, a}, {}}});
      for (VertexId b : nbrs) {
        if (b <= a) continue;
        if (g.EdgesBetween(a, b).empty()) continue;
        if (a > v) sites.push_back({Rule::kDeltaWye, {{v, a, b}, {}}});
        if (inner && simple && (g.Degree(v) == 2 || g.Degree(v) == 3)) {
          sites.push_back({Rule::kEdgeDeletion, {{v, a, b}, {}}});
        }
        if (inner && simple && g.Degree(v) == 4) {
          sites.push_back({Rule::kEdgeReplacement, {{v, a, b}, {}}});
        }
      }
    }
  }
  for (EdgeId e : g.Edges()) sites.push_back({Rule::kEdgeSubdivision, {{}, {e}}});
  return sites;
}

}  // namespace vsparse::testing

#endif  // VSPARSE_TESTS_RULE_SITES_HPP_
