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

#include <random>

#include "rule_sites.hpp"
#include "test_support.hpp"
#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/wye_delta.hpp"

namespace vsparse {
namespace {

using testing::AllSites;
using testing::RandomRational;
using testing::RandomUndirected;

TerminalGraph Star(WeightRole role, const std::vector<Rational>& spokes) {
  // Center 0, leaves 1..d as terminals.
  TerminalGraph g = TerminalGraph::WithVertices(false, role, static_cast<int>(spokes.size()) + 1);
  std::vector<VertexId> leaves;
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    g.AddEdge(0, static_cast<VertexId>(i + 1), spokes[i]);
    leaves.push_back(static_cast<VertexId>(i + 1));
  }
  g.SetTerminals(leaves);
  return g;
}

TerminalGraph Triangle(WeightRole role, Rational xy, Rational xz, Rational yz) {
  TerminalGraph g = TerminalGraph::WithVertices(false, role, 3);
  g.AddEdge(0, 1, xy);
  g.AddEdge(0, 2, xz);
  g.AddEdge(1, 2, yz);
  g.SetTerminals({0, 1, 2});
  return g;
}

Rational WeightBetween(const TerminalGraph& g, VertexId a, VertexId b) {
  const auto edges = g.EdgesBetween(a, b);
  EXPECT_EQ(edges.size(), 1u);
  return edges.empty() ? Rational(-1) : g.weight(edges.front());
}

void ExpectSameCuts(const TerminalGraph& before, const TerminalGraph& after) {
  const auto report = CompareGraphs(before, after, EquivalenceMode::kCut);
  EXPECT_TRUE(report.pass()) << report.ToJson().dump();
}

void ExpectSameDistances(const TerminalGraph& before, const TerminalGraph& after) {
  EXPECT_EQ(TerminalDistanceMatrix(before), TerminalDistanceMatrix(after));
}

void ExpectSame(const TerminalGraph& before, const TerminalGraph& after) {
  if (before.role() == WeightRole::kCapacity) {
    ExpectSameCuts(before, after);
  } else {
    ExpectSameDistances(before, after);
  }
}

// ---- names and modes --------------------------------------------------------

TEST(RuleNames, RoundTrip) {
  for (int r = 1; r <= 8; ++r) {
    const Rule rule = static_cast<Rule>(r);
    EXPECT_EQ(ParseRuleName(RuleName(rule)), rule);
  }
  EXPECT_FALSE(ParseRuleName("wye").has_value());
}

TEST(RewriteModes, FollowWeightRole) {
  EXPECT_EQ(ModeOf(TerminalGraph(false, WeightRole::kCapacity)), RewriteMode::kCut);
  EXPECT_EQ(ModeOf(TerminalGraph(false, WeightRole::kLength)), RewriteMode::kDistance);
  EXPECT_THROW(ModeOf(TerminalGraph(true, WeightRole::kCapacity)), PreconditionError);
  EXPECT_THROW(ModeOf(TerminalGraph(false, WeightRole::kNone)), PreconditionError);
}

// ---- normalization ---------------------------------------------------------

TEST(NormalizeSite, LowersExcessSpokeInCutMode) {
  TerminalGraph g = Star(WeightRole::kCapacity, {2, 3, 10});
  const auto norm = NormalizeSite(g, Rule::kWyeDelta, {{0}, {}});
  ASSERT_TRUE(norm.has_value());
  EXPECT_EQ(norm->before, Rational(10));
  EXPECT_EQ(norm->after, Rational(5));
  EXPECT_EQ(WeightBetween(g, 0, 3), Rational(5));
}

TEST(NormalizeSite, LeavesValidSpokesAlone) {
  TerminalGraph g = Star(WeightRole::kCapacity, {2, 3, 4});
  EXPECT_FALSE(NormalizeSite(g, Rule::kWyeDelta, {{0}, {}}).has_value());
}

TEST(NormalizeSite, RepairsTriangleInequalityInDistanceMode) {
  TerminalGraph g = Triangle(WeightRole::kLength, 9, 2, 3);
  const auto norm = NormalizeSite(g, Rule::kDeltaWye, {{0, 1, 2}, {}});
  ASSERT_TRUE(norm.has_value());
  EXPECT_EQ(norm->after, Rational(5));
  EXPECT_EQ(WeightBetween(g, 0, 1), Rational(5));
}

TEST(NormalizeSite, RejectsWrongShape) {
  TerminalGraph g = Star(WeightRole::kCapacity, {2, 3});
  EXPECT_THROW(NormalizeSite(g, Rule::kWyeDelta, {{0}, {}}), PreconditionError);
  EXPECT_THROW(NormalizeSite(g, Rule::kSeries, {{0}, {}}), PreconditionError);
}

TEST(NormalizeSite, PreservesCutsOnRandomStars) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    TerminalGraph g = Star(WeightRole::kCapacity,
                           {RandomRational(rng), RandomRational(rng), RandomRational(rng, 40)});
    const TerminalGraph before = g;
    NormalizeSite(g, Rule::kWyeDelta, {{0}, {}});
    ExpectSameCuts(before, g);
  }
}

// ---- primitive rules ---------------------------------------------------------

TEST(ApplyRule, WyeDeltaCutFormulas) {
  TerminalGraph g = Star(WeightRole::kCapacity, {2, 3, 4});
  const TerminalGraph before = g;
  const auto step = ApplyRule(g, Rule::kWyeDelta, {{0}, {}});
  EXPECT_FALSE(g.HasVertex(0));
  EXPECT_EQ(WeightBetween(g, 1, 2), Rational(1, 2));
  EXPECT_EQ(WeightBetween(g, 2, 3), Rational(5, 2));
  EXPECT_EQ(WeightBetween(g, 1, 3), Rational(3, 2));
  EXPECT_EQ(step.writes.size(), 3u);
  ExpectSameCuts(before, g);
}

TEST(ApplyRule, DeltaWyeCutFormulas) {
  TerminalGraph g = Triangle(WeightRole::kCapacity, 1, 2, 3);
  const TerminalGraph before = g;
  const auto step = ApplyRule(g, Rule::kDeltaWye, {{0, 1, 2}, {}});
  const VertexId w = step.new_vertex;
  ASSERT_TRUE(g.HasVertex(w));
  EXPECT_FALSE(g.IsTerminal(w));
  EXPECT_EQ(WeightBetween(g, w, 0), Rational(3));
  EXPECT_EQ(WeightBetween(g, w, 1), Rational(4));
  EXPECT_EQ(WeightBetween(g, w, 2), Rational(5));
  ExpectSameCuts(before, g);
}

TEST(ApplyRule, DeltaWyeDistanceFormulas) {
  TerminalGraph g = Triangle(WeightRole::kLength, 3, 4, 5);
  const TerminalGraph before = g;
  const VertexId w = ApplyRule(g, Rule::kDeltaWye, {{0, 1, 2}, {}}).new_vertex;
  EXPECT_EQ(WeightBetween(g, w, 0), Rational(1));
  EXPECT_EQ(WeightBetween(g, w, 1), Rational(2));
  EXPECT_EQ(WeightBetween(g, w, 2), Rational(3));
  ExpectSameDistances(before, g);
}

TEST(ApplyRule, SeriesDistanceAddsLengths) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kLength, 3);
  g.AddEdge(0, 1, 2);
  g.AddEdge(1, 2, 5);
  g.SetTerminals({0, 2});
  ApplyRule(g, Rule::kSeries, {{1}, {}});
  EXPECT_EQ(WeightBetween(g, 0, 2), Rational(7));
}

TEST(ApplyRule, SeriesCutTakesMinimum) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 3);
  g.AddEdge(0, 1, 2);
  g.AddEdge(1, 2, 5);
  g.SetTerminals({0, 2});
  ApplyRule(g, Rule::kSeries, {{1}, {}});
  EXPECT_EQ(WeightBetween(g, 0, 2), Rational(2));
}

TEST(ApplyRule, ParallelMergesByMode) {
  for (WeightRole role : {WeightRole::kCapacity, WeightRole::kLength}) {
    TerminalGraph g = TerminalGraph::WithVertices(false, role, 2);
    const EdgeId first = g.AddEdge(0, 1, 3);
    g.AddEdge(0, 1, Rational(1, 2));
    g.AddEdge(1, 0, 4);
    g.SetTerminals({0, 1});
    ApplyRule(g, Rule::kParallel, {{0, 1}, {}});
    ASSERT_EQ(g.num_edges(), 1);
    EXPECT_TRUE(g.HasEdge(first));
    EXPECT_EQ(g.weight(first),
              role == WeightRole::kCapacity ? Rational(15, 2) : Rational(1, 2));
  }
}

TEST(ApplyRule, DegreeOneRemovesLeafAndIsolatedVertex) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 3);
  g.AddEdge(0, 1, 1);
  g.SetTerminals({0});
  ApplyRule(g, Rule::kDegreeOne, {{1}, {}});
  ApplyRule(g, Rule::kDegreeOne, {{2}, {}});
  EXPECT_EQ(g.num_vertices(), 1);
}

TEST(ApplyRule, RefusesTerminalsAndBadShapes) {
  TerminalGraph g = Star(WeightRole::kCapacity, {1, 2, 3});
  EXPECT_THROW(ApplyRule(g, Rule::kDegreeOne, {{1}, {}}), PreconditionError);
  EXPECT_THROW(ApplyRule(g, Rule::kSeries, {{0}, {}}), PreconditionError);
  EXPECT_THROW(ApplyRule(g, Rule::kParallel, {{0, 1}, {}}), PreconditionError);
  EXPECT_THROW(ApplyRule(g, Rule::kDeltaWye, {{0, 1, 2}, {}}), PreconditionError);
  EXPECT_THROW(ApplyRule(g, Rule::kEdgeDeletion, {{0, 1, 2}, {}}), PreconditionError);
  g.SetTerminals({0, 1});
  EXPECT_THROW(ApplyRule(g, Rule::kWyeDelta, {{0}, {}}), PreconditionError);
}

TEST(ApplyRule, WyeDeltaOutputsAreNonNegative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    TerminalGraph g = Star(WeightRole::kCapacity,
                           {RandomRational(rng, 30), RandomRational(rng, 30), RandomRational(rng, 30)});
    const auto step = ApplyRule(g, Rule::kWyeDelta, {{0}, {}});
    for (const auto& w : step.writes) EXPECT_FALSE(w.weight.is_negative());
  }
}

// ---- composites --------------------------------------------------------------

TEST(ApplyComposite, EdgeDeletionRemovesTriangleEdge) {
  // x=0 adjacent to u=1, v=2 and t=3; u, v, t terminals.
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 4);
  g.AddEdge(0, 1, 2);
  g.AddEdge(0, 2, 3);
  g.AddEdge(1, 2, 1);
  g.AddEdge(0, 3, 4);
  g.SetTerminals({1, 2, 3});
  const TerminalGraph before = g;
  const auto steps = ApplyComposite(g, Rule::kEdgeDeletion, {{0, 1, 2}, {}});
  ASSERT_GE(steps.size(), 2u);
  EXPECT_EQ(steps[0].rule, Rule::kDeltaWye);
  EXPECT_EQ(steps[1].rule, Rule::kSeries);
  EXPECT_FALSE(g.HasVertex(0));
  EXPECT_TRUE(g.EdgesBetween(1, 2).empty());
  EXPECT_EQ(g.Neighbors(3).size(), 1u);
  ExpectSameCuts(before, g);
}

TEST(ApplyComposite, EdgeReplacementPushesEdgeAcrossCenter) {
  // c=0 with neighbours 1..4; edge (1,2) is pushed across c.
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 5);
  for (VertexId v = 1; v <= 4; ++v) g.AddEdge(0, v, v + 1);
  g.AddEdge(1, 2, 2);
  g.SetTerminals({1, 2, 3, 4});
  const TerminalGraph before = g;
  const auto steps = ApplyComposite(g, Rule::kEdgeReplacement, {{0, 1, 2}, {}});
  ASSERT_GE(steps.size(), 2u);
  EXPECT_EQ(steps[0].rule, Rule::kDeltaWye);
  EXPECT_EQ(steps[1].rule, Rule::kWyeDelta);
  EXPECT_FALSE(g.HasVertex(0));
  EXPECT_TRUE(g.EdgesBetween(1, 2).empty());
  ExpectSameCuts(before, g);
}

TEST(ApplyComposite, SubdivisionByMode) {
  for (WeightRole role : {WeightRole::kCapacity, WeightRole::kLength}) {
    TerminalGraph g = TerminalGraph::WithVertices(false, role, 2);
    const EdgeId e = g.AddEdge(0, 1, 5);
    g.SetTerminals({0, 1});
    const TerminalGraph before = g;
    const auto steps = ApplyComposite(g, Rule::kEdgeSubdivision, {{}, {e}});
    ASSERT_EQ(steps.size(), 1u);
    const VertexId mid = steps[0].new_vertex;
    EXPECT_FALSE(g.HasEdge(e));
    EXPECT_EQ(g.Degree(mid), 2);
    const Rational want = role == WeightRole::kCapacity ? Rational(5) : Rational(5, 2);
    EXPECT_EQ(WeightBetween(g, 0, mid), want);
    EXPECT_EQ(WeightBetween(g, mid, 1), want);
    ExpectSame(before, g);
  }
}

// ---- random single-rule exactness -----------------------------------------

void CheckEverySingleApplication(WeightRole role, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int applied = 0;
  std::vector<int> per_rule(9, 0);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(4, 9);
    const int n = size(rng);
    const int k = std::min(n - 1, 2 + trial % 3);
    TerminalGraph g = RandomUndirected(rng, n, k, 0.45, role);
    if (trial % 4 == 0) {
      const auto edges = g.Edges();
      if (!edges.empty()) {
        const Edge e = g.edge(edges.front());
        g.AddEdge(e.head, e.tail, RandomRational(rng));
      }
    }
    for (const auto& [rule, site] : AllSites(g)) {
      TerminalGraph h = g;
      if (static_cast<int>(rule) <= 5) {
        ApplyRule(h, rule, site);
      } else {
        ApplyComposite(h, rule, site);
      }
      ExpectSame(g, h);
      ++applied;
      ++per_rule[static_cast<int>(rule)];
    }
  }
  EXPECT_GT(applied, 500);
  for (int r = 1; r <= 8; ++r) EXPECT_GT(per_rule[r], 0) << RuleName(static_cast<Rule>(r));
}

TEST(RuleExactness, EveryCutApplicationPreservesMincuts) {
  CheckEverySingleApplication(WeightRole::kCapacity, 101);
}

TEST(RuleExactness, EveryDistanceApplicationPreservesDistances) {
  CheckEverySingleApplication(WeightRole::kLength, 202);
}

// ---- greedy driver -----------------------------------------------------------

TEST(GreedyReduce, PathOfNonTerminalsBecomesMinEdge) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 7);
  const std::vector<Rational> caps = {7, 4, Rational(5, 2), 9, 3, 6};
  for (VertexId v = 0; v < 6; ++v) g.AddEdge(v, v + 1, caps[v]);
  g.SetTerminals({0, 6});
  GreedyReduce(g);
  ASSERT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(WeightBetween(g, 0, 6), Rational(5, 2));
}

TEST(GreedyReduce, TreeWithTerminalLeavesLosesDegreeTwoVertices) {
  // 0 - 1 - 2 - 3(branch) - {4 - 5, 6}; leaves 0, 5, 6 are terminals.
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kLength, 7);
  g.AddEdge(0, 1, 1);
  g.AddEdge(1, 2, 2);
  g.AddEdge(2, 3, 3);
  g.AddEdge(3, 4, 4);
  g.AddEdge(4, 5, 5);
  g.AddEdge(3, 6, 6);
  g.SetTerminals({0, 5, 6});
  const TerminalGraph before = g;
  GreedyReduce(g, {.max_rule = 3});
  for (VertexId v : g.Vertices()) {
    if (!g.IsTerminal(v)) {
      EXPECT_NE(g.Degree(v), 2);
    }
  }
  EXPECT_EQ(g.num_vertices(), 4);
  ExpectSameDistances(before, g);
}

TEST(GreedyReduce, RandomGraphsKeepMincutTable) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(5, 14);
    const int n = size(rng);
    const int k = 2 + trial % 3;
    TerminalGraph g = RandomUndirected(rng, n, k, 0.3, WeightRole::kCapacity);
    const TerminalGraph before = g;
    GreedyReduce(g);
    EXPECT_EQ(TerminalMincutTable(before), TerminalMincutTable(g)) << "trial " << trial;
  }
}

TEST(GreedyReduce, RandomGraphsKeepDistances) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(5, 14);
    const int n = size(rng);
    TerminalGraph g = RandomUndirected(rng, n, 2 + trial % 3, 0.3, WeightRole::kLength);
    const TerminalGraph before = g;
    GreedyReduce(g);
    ExpectSameDistances(before, g);
  }
}

TEST(GreedyReduce, LeavesNoApplicableRule) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 50; ++trial) {
    TerminalGraph g = RandomUndirected(rng, 12, 3, 0.25, WeightRole::kCapacity);
    GreedyReduce(g);
    for (const auto& [rule, site] : AllSites(g)) {
      EXPECT_GT(static_cast<int>(rule), 4) << RuleName(rule);
    }
  }
}

// ---- step logs -----------------------------------------------------------------

TEST(StepLog, LineRoundTrip) {
  ReductionStep step;
  step.rule = Rule::kDeltaWye;
  step.mode = RewriteMode::kDistance;
  step.site = {{3, 1, 4}, {}};
  step.writes = {{10, 3, 9, Rational(1, 2)}, {11, 1, 9, 2}};
  step.normalization = Normalization{5, 9, 4};
  step.new_vertex = 9;
  const std::string line = step.ToLine();
  EXPECT_EQ(line,
            "step delta-wye distance v=3,1,4 e=- new=10:3-9:1/2,11:1-9:2 norm=5:9:4 add=9");
  EXPECT_EQ(ReductionStep::FromLine(line), step);
}

TEST(StepLog, MalformedLinesReportLineNumber) {
  const std::string text = testing::Join({"# header", "", "step series cut v=1 e=- new=- norm=- add=-",
                                          "step bogus cut v=1 e=- new=- norm=- add=-"});
  try {
    StepLogFromText(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(ReductionStep::FromLine("step series cut v=x e=- new=- norm=- add=-"), ParseError);
}

TEST(StepLog, ReplayReproducesGraph) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightRole role = trial % 2 ? WeightRole::kLength : WeightRole::kCapacity;
    TerminalGraph g = RandomUndirected(rng, 12, 3, 0.3, role);
    TerminalGraph reduced = g;
    auto steps = GreedyReduce(reduced);
    const auto parsed = StepLogFromText(StepLogToText(steps));
    ASSERT_EQ(parsed, steps);
    TerminalGraph replayed = g;
    ReplaySteps(replayed, parsed);
    EXPECT_EQ(replayed.Vertices(), reduced.Vertices());
    EXPECT_EQ(replayed.Edges(), reduced.Edges());
    for (EdgeId e : reduced.Edges()) EXPECT_EQ(replayed.weight(e), reduced.weight(e));
  }
}

TEST(StepLog, ReplayDetectsDivergence) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 3);
  g.AddEdge(0, 1, 2);
  g.AddEdge(1, 2, 5);
  g.SetTerminals({0, 2});
  TerminalGraph h = g;
  auto steps = GreedyReduce(h);
  ASSERT_EQ(steps.size(), 1u);
  steps[0].writes[0].weight = 3;
  EXPECT_THROW(ReplaySteps(g, steps), PreconditionError);
}

}  // namespace
}  // namespace vsparse
