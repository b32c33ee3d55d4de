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

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.hpp"
#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"

namespace vsparse {
namespace {

TerminalGraph SingleEdge(bool directed, WeightRole role, Rational w) {
  TerminalGraph g = TerminalGraph::WithVertices(directed, role, 2);
  g.AddEdge(0, 1, std::move(w));
  g.SetTerminals({0, 1});
  return g;
}

TEST(ReachOracleTest, SingleArc) {
  const auto m = TerminalReachMatrix(SingleEdge(true, WeightRole::kNone, 1));
  EXPECT_EQ(m, (ReachMatrix{{false, true}, {false, false}}));
}

TEST(ReachOracleTest, StronglyConnectedIsAllTrue) {
  TerminalGraph g = TerminalGraph::WithVertices(true, WeightRole::kNone, 4);
  for (VertexId v = 0; v < 4; ++v) g.AddEdge(v, (v + 1) % 4, Rational(1));
  g.SetTerminals({0, 1, 2, 3});
  const auto m = TerminalReachMatrix(g);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m[i][j], i != j);
  }
}

TEST(ReachOracleTest, ClosureAgreesWithSearch) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 6));
    const auto g = testing::RandomDirected(rng, n, k, 0.08, false);
    EXPECT_EQ(TerminalReachMatrix(g), TerminalReachMatrixByClosure(g));
  }
}

TEST(MincutOracleTest, SingleEdgeValue) {
  const auto g = SingleEdge(false, WeightRole::kCapacity, 3);
  EXPECT_EQ(TerminalMincut(g, 0b01).value, Rational(3));
}

TEST(MincutOracleTest, DisconnectedTerminalsGiveZero) {
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 3);
  g.AddEdge(0, 2, Rational(4));
  g.SetTerminals({0, 1});
  EXPECT_EQ(TerminalMincut(g, 0b01).value, Rational(0));
}

TEST(MincutOracleTest, RejectsTrivialSides) {
  const auto g = SingleEdge(false, WeightRole::kCapacity, 3);
  EXPECT_THROW(TerminalMincut(g, 0), PreconditionError);
  EXPECT_THROW(TerminalMincut(g, 0b11), PreconditionError);
}

TEST(MincutOracleTest, MaxFlowMatchesExhaustive) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int k = 2 + static_cast<int>(rng() % std::min(n - 1, 3));
    const auto g = testing::RandomUndirected(rng, n, k, 0.45, WeightRole::kCapacity);
    for (TerminalMask side = 1; side + 1 < (TerminalMask{1} << k); ++side) {
      const auto flow = TerminalMincut(g, side);
      EXPECT_EQ(flow.value, TerminalMincutExhaustive(g, side));
      // The residual source side is a cut of exactly that value.
      std::vector<char> in(g.vertex_bound(), 0);
      for (VertexId v : flow.source_side) in[v] = 1;
      Rational cut;
      for (EdgeId e : g.Edges()) {
        if (in[g.edge(e).tail] != in[g.edge(e).head]) cut += g.weight(e);
      }
      EXPECT_EQ(cut, flow.value);
    }
  }
}

TEST(MincutOracleTest, TableSizes) {
  std::mt19937_64 rng(1);
  const auto g2 = testing::RandomUndirected(rng, 6, 2, 0.5, WeightRole::kCapacity);
  const auto g4 = testing::RandomUndirected(rng, 6, 4, 0.5, WeightRole::kCapacity);
  EXPECT_EQ(TerminalMincutTable(g2).size(), 1u);
  EXPECT_EQ(TerminalMincutTable(g4).size(), 7u);
  EXPECT_THROW(TerminalMincutTable(g4, 3), SizeGuardError);
}

TEST(DistanceOracleTest, SingleEdgeAndUnreachable) {
  const auto m = TerminalDistanceMatrix(SingleEdge(false, WeightRole::kLength, 7));
  EXPECT_EQ(m[0][1], Distance(Rational(7)));
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kLength, 2);
  g.SetTerminals({0, 1});
  const auto u = TerminalDistanceMatrix(g);
  EXPECT_FALSE(u[0][1].finite());
  EXPECT_EQ(u[0][1].str(), "inf");
}

TEST(DistanceOracleTest, DijkstraMatchesPathEnumeration) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int k = 2 + static_cast<int>(rng() % std::min(n - 1, 4));
    const auto g = testing::RandomUndirected(rng, n, k, 0.4, WeightRole::kLength);
    EXPECT_EQ(TerminalDistanceMatrix(g), TerminalDistanceMatrixBrute(g));
  }
}

TEST(SparsestCutTest, SingleEdge) {
  const auto g = SingleEdge(false, WeightRole::kCapacity, Rational(5, 2));
  DemandFunction d(2);
  d.Set(0, 1, 1);
  const auto cut = SparsestCutBruteforce(g, d);
  EXPECT_EQ(cut.ratio, Rational(5, 2));
  EXPECT_EQ(cut.witness, (std::vector<VertexId>{0}));
}

TerminalGraph ScaleCapacities(const TerminalGraph& g, const Rational& f) {
  TerminalGraph h = g;
  for (EdgeId e : h.Edges()) h.SetWeight(e, h.weight(e) * f);
  return h;
}

TEST(SparsestCutTest, HomogeneityAndRouteAgreement) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int k = 2 + static_cast<int>(rng() % std::min(n - 1, 4));
    const auto g = testing::RandomUndirected(rng, n, k, 0.5, WeightRole::kCapacity);
    const auto d = RandomDemands(k, rng());
    const auto base = SparsestCutBruteforce(g, d);
    const auto doubled = SparsestCutBruteforce(ScaleCapacities(g, 2), d);
    EXPECT_EQ(doubled.ratio, base.ratio * Rational(2));
    EXPECT_EQ(doubled.witness, base.witness);
    const auto more_demand = SparsestCutBruteforce(g, d.Scaled(3));
    EXPECT_EQ(more_demand.ratio, base.ratio / Rational(3));
    EXPECT_EQ(more_demand.witness, base.witness);
    EXPECT_EQ(SparsestCutViaTerminalCuts(g, d).ratio, base.ratio);
  }
}

TEST(EquivalenceReportTest, GraphAgainstItself) {
  std::mt19937_64 rng(17);
  const auto g = testing::RandomUndirected(rng, 8, 4, 0.5, WeightRole::kCapacity);
  for (auto mode : {EquivalenceMode::kCut, EquivalenceMode::kDistance,
                    EquivalenceMode::kFlow, EquivalenceMode::kReach}) {
    const auto report = CompareGraphs(g, g, mode);
    EXPECT_TRUE(report.pass());
    EXPECT_GT(report.compared, 0);
  }
}

TEST(EquivalenceReportTest, PerturbedUniqueMinCutIsWitnessed) {
  // Path 0 - 2 - 1: the lighter edge is the unique min cut.
  TerminalGraph g = TerminalGraph::WithVertices(false, WeightRole::kCapacity, 3);
  g.AddEdge(0, 2, Rational(2));
  const EdgeId light = g.AddEdge(2, 1, Rational(1));
  g.SetTerminals({0, 1});
  TerminalGraph h = g;
  h.SetWeight(light, Rational(3, 2));
  const auto report = CompareGraphs(g, h, EquivalenceMode::kCut);
  ASSERT_FALSE(report.pass());
  ASSERT_EQ(report.mismatches.size(), 1u);
  EXPECT_EQ(report.mismatches[0].expected, "1");
  EXPECT_EQ(report.mismatches[0].actual, "3/2");
  EXPECT_EQ(report.mismatches[0].witness["S"], nlohmann::json({0}));
  EXPECT_EQ(report.ToJson()["pass"], false);
}

TEST(EquivalenceReportTest, TerminalCountMismatchThrows) {
  const auto g = SingleEdge(false, WeightRole::kCapacity, 1);
  TerminalGraph h = g;
  h.SetTerminals({0});
  EXPECT_THROW(CompareGraphs(g, h, EquivalenceMode::kCut), PreconditionError);
}

}  // namespace
}  // namespace vsparse
