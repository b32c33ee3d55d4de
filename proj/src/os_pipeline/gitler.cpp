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
#include "vsparse/graph_io.hpp"
#include "vsparse/os_pipeline.hpp"

namespace vsparse {
namespace {

// Drives the rules on a half-grid without diagonal edges, keeping `layout`
// in step. A chord is an extra edge across one grid square; pushing it moves
// it square by square to the outer boundary, where it is deleted.
class HalfGridReducer {
 public:
  HalfGridReducer(TerminalGraph& g, HalfGridLayout& layout, std::vector<ReductionStep>& steps)
      : g_(g), layout_(layout), steps_(steps) {}

  // Chord (a, b) -- (a+1, b+1), pushed towards (1, n).
  void PushMain(int a, int b) {
    while (true) {
      const bool last = a == 1 || b + 1 == n();
      Push(last, {a, b + 1}, {a, b}, {a + 1, b + 1});
      if (last) return;
      --a;
      ++b;
    }
  }

  // Chord (a, b) -- (a-1, b+1), pushed towards row 1.
  void PushAntiUp(int a, int b) {
    while (true) {
      const bool last = a - 1 == 1;
      Push(last, {a - 1, b}, {a, b}, {a - 1, b + 1});
      if (last) return;
      --a;
      --b;
    }
  }

  // Chord (a, b) -- (a-1, b+1), pushed towards column n.
  void PushAntiDown(int a, int b) {
    while (true) {
      const bool last = b + 1 == n();
      Push(last, {a, b + 1}, {a, b}, {a - 1, b + 1});
      if (last) return;
      ++a;
      ++b;
    }
  }

  void Eliminate(int m) {
    const VertexId d = at(m, m);
    if (g_.IsTerminal(d)) throw PreconditionError("diagonal vertex " + std::to_string(m) + " is a terminal");
    const bool above = m >= 2;
    const bool beside = m < n();
    if (above && beside) {
      Apply(Rule::kSeries, d);
      PushMain(m - 1, m);
    } else {
      Apply(Rule::kDegreeOne, d);
    }
    // Column m above the diagonal, bottom to top.
    for (int i = m - 1; i >= 1; --i) {
      const VertexId x = at(i, m);
      const bool up = i >= 2;
      if (up && beside) {
        Apply(Rule::kWyeDelta, x);
        PushMain(i - 1, m);
        PushAntiUp(i, m - 1);
      } else if (up) {
        Apply(Rule::kSeries, x);
        PushAntiUp(i, m - 1);
      } else {
        Apply(beside ? Rule::kSeries : Rule::kDegreeOne, x);
      }
    }
    // Row m right of the diagonal, left to right.
    for (int j = m + 1; j <= n(); ++j) {
      const VertexId x = at(m, j);
      const bool right = j < n();
      if (above && right) {
        Apply(Rule::kWyeDelta, x);
        PushMain(m - 1, j);
        PushAntiDown(m + 1, j);
      } else if (right) {
        Apply(Rule::kSeries, x);
        PushAntiDown(m + 1, j);
      } else {
        Apply(above ? Rule::kSeries : Rule::kDegreeOne, x);
      }
    }
    layout_.RemoveIndex(m);
  }

 private:
  int n() const { return layout_.size(); }
  VertexId at(int i, int j) const { return layout_.at(i, j); }

  void Apply(Rule rule, VertexId v) { steps_.push_back(ApplyRule(g_, rule, {{v}, {}})); }

  // Moves the chord p--q across the square cornered at `center`; on the
  // boundary the chord is deleted instead.
  void Push(bool last, GridPoint center, GridPoint p, GridPoint q) {
    const Site site{{at(center.row, center.col), at(p.row, p.col), at(q.row, q.col)}, {}};
    auto done = ApplyComposite(g_, last ? Rule::kEdgeDeletion : Rule::kEdgeReplacement, site);
    layout_.set(center.row, center.col, done.front().new_vertex);
    steps_.insert(steps_.end(), done.begin(), done.end());
  }

  TerminalGraph& g_;
  HalfGridLayout& layout_;
  std::vector<ReductionStep>& steps_;
};

}  // namespace

std::vector<int> PromoteCorners(HalfGrid& hg) {
  std::vector<int> corners;
  for (int d : {1, 2, hg.size - 1, hg.size}) {
    if (d >= 1 && d <= hg.size) corners.push_back(d);
  }
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  std::vector<int> promoted;
  for (int d : corners) {
    if (hg.terminals.count(d)) continue;
    hg.terminals[d] = hg.num_terminals();
    promoted.push_back(d);
  }
  return promoted;
}

std::vector<ReductionStep> EliminateDiagonalVertex(TerminalGraph& g, HalfGridLayout& layout, int m) {
  if (m < 1 || m > layout.size()) throw PreconditionError("diagonal index out of range");
  std::vector<ReductionStep> steps;
  HalfGridReducer(g, layout, steps).Eliminate(m);
  return steps;
}

GitlerResult GitlerReduce(HalfGrid hg, RewriteMode mode, const Rational& pad) {
  for (const auto& [d, pos] : hg.terminals) {
    if (d < 1 || d > hg.size) throw PreconditionError("terminal off the half-grid diagonal");
  }
  GitlerResult result;
  for (int d : PromoteCorners(hg)) result.promoted.push_back(hg.terminals.at(d));
  std::sort(result.promoted.begin(), result.promoted.end());
  const WeightRole role = mode == RewriteMode::kCut ? WeightRole::kCapacity : WeightRole::kLength;
  result.input = CanonicalGraph(HalfGridToGraph(hg, role, pad, true, &result.layout));
  result.graph = result.input;
  HalfGridReducer reducer(result.graph, result.layout, result.steps);
  for (int i = 1; i < hg.size; ++i) reducer.PushMain(i, i);
  for (int m = hg.size; m >= 1; --m) {
    if (!result.graph.IsTerminal(result.layout.at(m, m))) reducer.Eliminate(m);
  }
  result.k_prime = result.layout.size();
  return result;
}

}  // namespace vsparse
