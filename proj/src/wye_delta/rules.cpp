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
#include <array>
#include <set>
#include <string>
#include <utility>

#include "vsparse/errors.hpp"
#include "vsparse/wye_delta.hpp"

namespace vsparse {
namespace {

struct Spoke {
  VertexId to;
  EdgeId edge;
};

std::string Describe(Rule rule) { return std::string(RuleName(rule)); }

void Require(bool ok, Rule rule, const std::string& what) {
  if (!ok) throw PreconditionError(Describe(rule) + ": " + what);
}

void RequireVertices(const TerminalGraph& g, Rule rule, const Site& site, std::size_t count) {
  Require(site.vertices.size() == count, rule,
          "expected " + std::to_string(count) + " site vertices");
  for (VertexId v : site.vertices) {
    Require(g.HasVertex(v), rule, "unknown vertex " + std::to_string(v));
  }
  std::set<VertexId> distinct(site.vertices.begin(), site.vertices.end());
  Require(distinct.size() == count, rule, "site vertices must be distinct");
}

void RequireNonTerminal(const TerminalGraph& g, Rule rule, VertexId v) {
  Require(!g.IsTerminal(v), rule, "vertex " + std::to_string(v) + " is a terminal");
}

// Incident edges of v as spokes sorted by neighbour, or empty when two of
// them share a neighbour.
std::vector<Spoke> DistinctSpokes(const TerminalGraph& g, VertexId v) {
  std::vector<Spoke> spokes;
  for (EdgeId e : g.Incident(v)) spokes.push_back({g.Other(e, v), e});
  std::sort(spokes.begin(), spokes.end(),
            [](const Spoke& a, const Spoke& b) { return a.to < b.to; });
  for (std::size_t i = 1; i < spokes.size(); ++i) {
    if (spokes[i].to == spokes[i - 1].to) return {};
  }
  return spokes;
}

EdgeId FirstEdge(const TerminalGraph& g, VertexId a, VertexId b) {
  const auto between = g.EdgesBetween(a, b);
  return between.empty() ? kNoEdge : between.front();
}

EdgeWrite Write(const TerminalGraph& g, EdgeId e) {
  return {e, g.edge(e).tail, g.edge(e).head, g.weight(e)};
}

// Lowers the one weight exceeding the sum of the other two, if any.
std::optional<Normalization> LowerExcess(TerminalGraph& g, const std::array<EdgeId, 3>& edges) {
  for (int i = 0; i < 3; ++i) {
    const Rational rest = g.weight(edges[(i + 1) % 3]) + g.weight(edges[(i + 2) % 3]);
    if (g.weight(edges[i]) > rest) {
      Normalization n{edges[i], g.weight(edges[i]), rest};
      g.SetWeight(edges[i], rest);
      return n;
    }
  }
  return std::nullopt;
}

std::vector<Spoke> WyeSpokes(const TerminalGraph& g, const Site& site) {
  RequireVertices(g, Rule::kWyeDelta, site, 1);
  const VertexId x = site.vertices[0];
  RequireNonTerminal(g, Rule::kWyeDelta, x);
  auto spokes = DistinctSpokes(g, x);
  Require(g.Degree(x) == 3 && spokes.size() == 3, Rule::kWyeDelta,
          "vertex " + std::to_string(x) + " needs three distinct neighbours");
  return spokes;
}

std::array<EdgeId, 3> TriangleEdges(const TerminalGraph& g, const Site& site) {
  RequireVertices(g, Rule::kDeltaWye, site, 3);
  const auto& v = site.vertices;
  const std::array<EdgeId, 3> edges{FirstEdge(g, v[0], v[1]), FirstEdge(g, v[0], v[2]),
                                    FirstEdge(g, v[1], v[2])};
  for (EdgeId e : edges) Require(e != kNoEdge, Rule::kDeltaWye, "site is not a triangle");
  return edges;
}

ReductionStep DegreeOne(TerminalGraph& g, const Site& site) {
  RequireVertices(g, Rule::kDegreeOne, site, 1);
  const VertexId x = site.vertices[0];
  RequireNonTerminal(g, Rule::kDegreeOne, x);
  Require(g.Degree(x) <= 1, Rule::kDegreeOne, "vertex " + std::to_string(x) + " has degree > 1");
  g.RemoveVertex(x);
  return {};
}

ReductionStep Series(TerminalGraph& g, RewriteMode mode, const Site& site) {
  RequireVertices(g, Rule::kSeries, site, 1);
  const VertexId y = site.vertices[0];
  RequireNonTerminal(g, Rule::kSeries, y);
  const auto spokes = DistinctSpokes(g, y);
  Require(g.Degree(y) == 2 && spokes.size() == 2, Rule::kSeries,
          "vertex " + std::to_string(y) + " needs two distinct neighbours");
  const Rational& a = g.weight(spokes[0].edge);
  const Rational& b = g.weight(spokes[1].edge);
  const Rational w = mode == RewriteMode::kCut ? min(a, b) : a + b;
  g.RemoveVertex(y);
  ReductionStep step;
  step.writes.push_back(Write(g, g.AddEdge(spokes[0].to, spokes[1].to, w)));
  return step;
}

ReductionStep Parallel(TerminalGraph& g, RewriteMode mode, const Site& site) {
  RequireVertices(g, Rule::kParallel, site, 2);
  const auto bundle = g.EdgesBetween(site.vertices[0], site.vertices[1]);
  Require(bundle.size() >= 2, Rule::kParallel, "fewer than two parallel edges");
  Rational w = g.weight(bundle[0]);
  for (std::size_t i = 1; i < bundle.size(); ++i) {
    w = mode == RewriteMode::kCut ? w + g.weight(bundle[i]) : min(w, g.weight(bundle[i]));
    g.RemoveEdge(bundle[i]);
  }
  g.SetWeight(bundle[0], w);
  ReductionStep step;
  step.writes.push_back(Write(g, bundle[0]));
  return step;
}

ReductionStep WyeDelta(TerminalGraph& g, RewriteMode mode, const Site& site) {
  const auto spokes = WyeSpokes(g, site);
  ReductionStep step;
  if (mode == RewriteMode::kCut) {
    step.normalization = LowerExcess(g, {spokes[0].edge, spokes[1].edge, spokes[2].edge});
  }
  const Rational cu = g.weight(spokes[0].edge);
  const Rational cv = g.weight(spokes[1].edge);
  const Rational cw = g.weight(spokes[2].edge);
  g.RemoveVertex(site.vertices[0]);
  auto add = [&](int i, int j, const Rational& w) {
    step.writes.push_back(Write(g, g.AddEdge(spokes[i].to, spokes[j].to, w)));
  };
  if (mode == RewriteMode::kCut) {
    add(0, 1, (cu + cv - cw).half());
    add(0, 2, (cu + cw - cv).half());
    add(1, 2, (cv + cw - cu).half());
  } else {
    add(0, 1, cu + cv);
    add(0, 2, cu + cw);
    add(1, 2, cv + cw);
  }
  return step;
}

ReductionStep DeltaWye(TerminalGraph& g, RewriteMode mode, const Site& site) {
  const auto edges = TriangleEdges(g, site);
  ReductionStep step;
  if (mode == RewriteMode::kDistance) step.normalization = LowerExcess(g, edges);
  const Rational xy = g.weight(edges[0]);
  const Rational xz = g.weight(edges[1]);
  const Rational yz = g.weight(edges[2]);
  for (EdgeId e : edges) g.RemoveEdge(e);
  const VertexId w = g.AddVertex();
  step.new_vertex = w;
  auto add = [&](VertexId v, const Rational& weight) {
    step.writes.push_back(Write(g, g.AddEdge(v, w, weight)));
  };
  const auto& v = site.vertices;
  if (mode == RewriteMode::kCut) {
    add(v[0], xy + xz);
    add(v[1], xy + yz);
    add(v[2], xz + yz);
  } else {
    add(v[0], (xy + xz - yz).half());
    add(v[1], (xy + yz - xz).half());
    add(v[2], (xz + yz - xy).half());
  }
  return step;
}

std::vector<ReductionStep> Subdivide(TerminalGraph& g, RewriteMode mode, const Site& site) {
  Require(site.vertices.empty() && site.edges.size() == 1 && g.HasEdge(site.edges[0]),
          Rule::kEdgeSubdivision, "expected one existing edge");
  const EdgeId e = site.edges[0];
  const Edge old = g.edge(e);
  const Rational w = mode == RewriteMode::kCut ? old.weight : old.weight.half();
  g.RemoveEdge(e);
  ReductionStep step;
  step.rule = Rule::kEdgeSubdivision;
  step.mode = mode;
  step.site = site;
  step.new_vertex = g.AddVertex();
  step.writes.push_back(Write(g, g.AddEdge(old.tail, step.new_vertex, w)));
  step.writes.push_back(Write(g, g.AddEdge(step.new_vertex, old.head, w)));
  return {step};
}

// Applicable site of `rule` (1..4) with the lowest id, if any.
std::optional<Site> LowestSite(const TerminalGraph& g, Rule rule) {
  for (VertexId v : g.Vertices()) {
    switch (rule) {
      case Rule::kDegreeOne:
        if (!g.IsTerminal(v) && g.Degree(v) <= 1) return Site{{v}, {}};
        break;
      case Rule::kSeries:
        if (!g.IsTerminal(v) && g.Degree(v) == 2 && DistinctSpokes(g, v).size() == 2) {
          return Site{{v}, {}};
        }
        break;
      case Rule::kParallel: {
        const auto nbrs = g.Neighbors(v);
        for (VertexId w : nbrs) {
          if (w > v && g.EdgesBetween(v, w).size() >= 2) return Site{{v, w}, {}};
        }
        break;
      }
      case Rule::kWyeDelta:
        if (!g.IsTerminal(v) && g.Degree(v) == 3 && DistinctSpokes(g, v).size() == 3) {
          return Site{{v}, {}};
        }
        break;
      default:
        return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kDegreeOne:
      return "degree-one";
    case Rule::kSeries:
      return "series";
    case Rule::kParallel:
      return "parallel";
    case Rule::kWyeDelta:
      return "wye-delta";
    case Rule::kDeltaWye:
      return "delta-wye";
    case Rule::kEdgeDeletion:
      return "edge-deletion";
    case Rule::kEdgeReplacement:
      return "edge-replacement";
    case Rule::kEdgeSubdivision:
      return "edge-subdivision";
  }
  return "";
}

std::optional<Rule> ParseRuleName(std::string_view name) {
  for (int r = 1; r <= 8; ++r) {
    if (RuleName(static_cast<Rule>(r)) == name) return static_cast<Rule>(r);
  }
  return std::nullopt;
}

std::string_view RewriteModeName(RewriteMode mode) {
  return mode == RewriteMode::kCut ? "cut" : "distance";
}

RewriteMode ModeOf(const TerminalGraph& g) {
  if (g.directed()) throw PreconditionError("rewrite rules need an undirected graph");
  switch (g.role()) {
    case WeightRole::kCapacity:
      return RewriteMode::kCut;
    case WeightRole::kLength:
      return RewriteMode::kDistance;
    case WeightRole::kNone:
      break;
  }
  throw PreconditionError("rewrite rules need capacities or lengths");
}

std::optional<Normalization> NormalizeSite(TerminalGraph& g, Rule rule, const Site& site) {
  const RewriteMode mode = ModeOf(g);
  if (rule == Rule::kWyeDelta) {
    const auto spokes = WyeSpokes(g, site);
    if (mode == RewriteMode::kCut) {
      return LowerExcess(g, {spokes[0].edge, spokes[1].edge, spokes[2].edge});
    }
    return std::nullopt;
  }
  if (rule == Rule::kDeltaWye) {
    const auto edges = TriangleEdges(g, site);
    if (mode == RewriteMode::kDistance) return LowerExcess(g, edges);
    return std::nullopt;
  }
  throw PreconditionError(Describe(rule) + ": no normalization for this rule");
}

ReductionStep ApplyRule(TerminalGraph& g, Rule rule, const Site& site) {
  const RewriteMode mode = ModeOf(g);
  ReductionStep step;
  switch (rule) {
    case Rule::kDegreeOne:
      step = DegreeOne(g, site);
      break;
    case Rule::kSeries:
      step = Series(g, mode, site);
      break;
    case Rule::kParallel:
      step = Parallel(g, mode, site);
      break;
    case Rule::kWyeDelta:
      step = WyeDelta(g, mode, site);
      break;
    case Rule::kDeltaWye:
      step = DeltaWye(g, mode, site);
      break;
    case Rule::kEdgeSubdivision:
      step = Subdivide(g, mode, site).front();
      break;
    default:
      throw PreconditionError(Describe(rule) + " is a composite rule");
  }
  step.rule = rule;
  step.mode = mode;
  step.site = site;
  return step;
}

std::vector<ReductionStep> MergeParallelAt(TerminalGraph& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<ReductionStep> steps;
  for (VertexId v : vertices) {
    if (!g.HasVertex(v)) continue;
    for (VertexId w : g.Neighbors(v)) {
      if (g.EdgesBetween(v, w).size() >= 2) {
        steps.push_back(ApplyRule(g, Rule::kParallel, {{std::min(v, w), std::max(v, w)}, {}}));
      }
    }
  }
  return steps;
}

std::vector<ReductionStep> ApplyComposite(TerminalGraph& g, Rule rule, const Site& site) {
  const RewriteMode mode = ModeOf(g);
  std::vector<ReductionStep> steps;
  std::vector<VertexId> touched;
  switch (rule) {
    case Rule::kEdgeDeletion: {
      RequireVertices(g, rule, site, 3);
      const VertexId x = site.vertices[0];
      RequireNonTerminal(g, rule, x);
      const auto spokes = DistinctSpokes(g, x);
      const int deg = g.Degree(x);
      Require((deg == 2 || deg == 3) && static_cast<int>(spokes.size()) == deg, rule,
              "center needs two or three distinct neighbours");
      steps.push_back(ApplyRule(g, Rule::kDeltaWye, site));
      const VertexId w = steps.back().new_vertex;
      steps.push_back(ApplyRule(g, deg == 3 ? Rule::kSeries : Rule::kDegreeOne, {{x}, {}}));
      for (const Spoke& s : spokes) touched.push_back(s.to);
      touched.push_back(w);
      break;
    }
    case Rule::kEdgeReplacement: {
      RequireVertices(g, rule, site, 3);
      const VertexId c = site.vertices[0];
      RequireNonTerminal(g, rule, c);
      const auto spokes = DistinctSpokes(g, c);
      Require(g.Degree(c) == 4 && spokes.size() == 4, rule,
              "center needs four distinct neighbours");
      steps.push_back(ApplyRule(g, Rule::kDeltaWye, site));
      const VertexId y = steps.back().new_vertex;
      steps.push_back(ApplyRule(g, Rule::kWyeDelta, {{c}, {}}));
      for (const Spoke& s : spokes) touched.push_back(s.to);
      touched.push_back(y);
      break;
    }
    case Rule::kEdgeSubdivision:
      return Subdivide(g, mode, site);
    default:
      throw PreconditionError(Describe(rule) + " is not a composite rule");
  }
  auto merged = MergeParallelAt(g, touched);
  steps.insert(steps.end(), merged.begin(), merged.end());
  return steps;
}

std::vector<ReductionStep> GreedyReduce(TerminalGraph& g, const GreedyPolicy& policy) {
  ModeOf(g);
  const int max_rule = std::clamp(policy.max_rule, 0, 4);
  std::vector<ReductionStep> steps;
  while (true) {
    bool fired = false;
    for (int r = 1; r <= max_rule && !fired; ++r) {
      if (auto site = LowestSite(g, static_cast<Rule>(r))) {
        steps.push_back(ApplyRule(g, static_cast<Rule>(r), *site));
        fired = true;
      }
    }
    if (!fired) return steps;
  }
}

void ReplaySteps(TerminalGraph& g, const std::vector<ReductionStep>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ReductionStep& want = steps[i];
    if (ModeOf(g) != want.mode) {
      throw PreconditionError("step " + std::to_string(i) + ": mode mismatch");
    }
    const ReductionStep got = ApplyRule(g, want.rule, want.site);
    if (got != want) {
      throw PreconditionError("step " + std::to_string(i) + " diverged: recorded '" +
                              want.ToLine() + "', replayed '" + got.ToLine() + "'");
    }
  }
}

}  // namespace vsparse
