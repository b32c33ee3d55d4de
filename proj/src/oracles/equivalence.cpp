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

#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"

namespace vsparse {
namespace {

nlohmann::json SideWitness(const TerminalGraph& g, TerminalMask side) {
  std::vector<VertexId> s;
  std::vector<VertexId> rest;
  for (int i = 0; i < g.num_terminals(); ++i) {
    ((side >> i) & 1U ? s : rest).push_back(i);
  }
  return {{"S", s}, {"K_minus_S", rest}};
}

SparsestCut Sparsest(const TerminalGraph& g, const DemandFunction& d) {
  if (g.num_vertices() <= 20) return SparsestCutBruteforce(g, d);
  return SparsestCutViaTerminalCuts(g, d);
}

}  // namespace

std::optional<EquivalenceMode> ParseEquivalenceMode(std::string_view name) {
  if (name == "reach") return EquivalenceMode::kReach;
  if (name == "cut") return EquivalenceMode::kCut;
  if (name == "distance") return EquivalenceMode::kDistance;
  if (name == "flow") return EquivalenceMode::kFlow;
  return std::nullopt;
}

std::string_view EquivalenceModeName(EquivalenceMode mode) {
  switch (mode) {
    case EquivalenceMode::kReach:
      return "reach";
    case EquivalenceMode::kCut:
      return "cut";
    case EquivalenceMode::kDistance:
      return "distance";
    case EquivalenceMode::kFlow:
      return "flow";
  }
  return "";
}

nlohmann::json EquivalenceReport::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const Mismatch& m : mismatches) {
    list.push_back({{"witness", m.witness},
                    {"expected", m.expected},
                    {"actual", m.actual}});
  }
  return {{"mode", std::string(EquivalenceModeName(mode))},
          {"pass", pass()},
          {"compared", compared},
          {"mismatches", std::move(list)}};
}

EquivalenceReport CompareGraphs(const TerminalGraph& g, const TerminalGraph& h,
                                EquivalenceMode mode,
                                const EquivalenceOptions& options) {
  if (g.num_terminals() != h.num_terminals()) {
    throw PreconditionError("terminal label mismatch: " +
                            std::to_string(g.num_terminals()) + " vs " +
                            std::to_string(h.num_terminals()) + " terminals");
  }
  EquivalenceReport report;
  report.mode = mode;
  const int k = g.num_terminals();
  switch (mode) {
    case EquivalenceMode::kReach: {
      const auto a = TerminalReachMatrix(g);
      const auto b = TerminalReachMatrix(h);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          ++report.compared;
          if (a[i][j] != b[i][j]) {
            report.mismatches.push_back({{{"from", i}, {"to", j}},
                                         a[i][j] ? "1" : "0",
                                         b[i][j] ? "1" : "0"});
          }
        }
      }
      break;
    }
    case EquivalenceMode::kCut: {
      const auto a = TerminalMincutTable(g, options.table_cap);
      const auto b = TerminalMincutTable(h, options.table_cap);
      for (const auto& [side, value] : a) {
        ++report.compared;
        const Rational& other = b.at(side);
        if (value != other) {
          report.mismatches.push_back({SideWitness(g, side), value.str(), other.str()});
        }
      }
      break;
    }
    case EquivalenceMode::kDistance: {
      const auto a = TerminalDistanceMatrix(g);
      const auto b = TerminalDistanceMatrix(h);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          ++report.compared;
          if (a[i][j] != b[i][j]) {
            report.mismatches.push_back({{{"from", i}, {"to", j}},
                                         a[i][j].str(), b[i][j].str()});
          }
        }
      }
      break;
    }
    case EquivalenceMode::kFlow: {
      if (k < 2) break;
      for (int s = 0; s < options.demand_samples; ++s) {
        const auto d = RandomDemands(k, options.seed + static_cast<std::uint64_t>(s));
        ++report.compared;
        const auto a = Sparsest(g, d);
        const auto b = Sparsest(h, d);
        if (a.ratio != b.ratio) {
          report.mismatches.push_back(
              {{{"demand_seed", options.seed + s}, {"witness_in_g", a.witness}},
               a.ratio.str(), b.ratio.str()});
        }
      }
      break;
    }
  }
  return report;
}

}  // namespace vsparse
