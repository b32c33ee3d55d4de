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

#ifndef VSPARSE_ORACLES_HPP_
#define VSPARSE_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsparse/rational.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// ---- reachability ---------------------------------------------------------

// k x k, indexed by terminal position; the diagonal is always false.
using ReachMatrix = std::vector<std::vector<bool>>;

// Breadth-first search from every terminal.
ReachMatrix TerminalReachMatrix(const TerminalGraph& g);
// Independent route: bitset transitive closure over all vertices.
ReachMatrix TerminalReachMatrixByClosure(const TerminalGraph& g);

// Vertices reachable from `sources` (forward) or reaching them (backward),
// as a membership vector indexed by vertex id.
std::vector<char> ReachableFrom(const TerminalGraph& g,
                                const std::vector<VertexId>& sources,
                                bool backward = false);

// ---- cuts -----------------------------------------------------------------

// Terminal subsets are bitmasks over terminal positions.
using TerminalMask = std::uint32_t;

struct CutResult {
  Rational value;
  std::vector<VertexId> source_side;  // ascending
};

// Min S-separating cut by exact max-flow with S collapsed to a super-source
// and K \ S to a super-sink. Undirected edges count in both directions.
CutResult TerminalMincut(const TerminalGraph& g, TerminalMask side);

// Exhaustive minimum over all placements of non-terminals; n - k <= 24.
Rational TerminalMincutExhaustive(const TerminalGraph& g, TerminalMask side);

// One entry per unordered bipartition; keys contain terminal 0 and are never
// the full mask. 2^(k-1) - 1 entries.
using MincutTable = std::map<TerminalMask, Rational>;
MincutTable TerminalMincutTable(const TerminalGraph& g, int cap = 12);

// ---- distances --------------------------------------------------------------

// Exact distance or the dedicated unreachable marker.
class Distance {
 public:
  Distance() = default;  // unreachable
  explicit Distance(Rational value) : value_(std::move(value)) {}
  static Distance Unreachable() { return Distance(); }

  bool finite() const { return value_.has_value(); }
  const Rational& value() const { return *value_; }
  std::string str() const { return finite() ? value_->str() : "inf"; }

  friend bool operator==(const Distance&, const Distance&) = default;
  friend bool operator<(const Distance& a, const Distance& b);

 private:
  std::optional<Rational> value_;
};

using DistanceMatrix = std::vector<std::vector<Distance>>;

DistanceMatrix TerminalDistanceMatrix(const TerminalGraph& g);
// Exhaustive simple-path enumeration; intended for n <= 9.
DistanceMatrix TerminalDistanceMatrixBrute(const TerminalGraph& g);

// ---- sparsest cut -------------------------------------------------------

// Symmetric non-negative demands between terminal positions, zero diagonal.
class DemandFunction {
 public:
  explicit DemandFunction(int k);
  int k() const { return k_; }
  const Rational& at(int i, int j) const { return d_[i][j]; }
  void Set(int i, int j, Rational value);
  DemandFunction Scaled(const Rational& factor) const;

 private:
  int k_;
  std::vector<std::vector<Rational>> d_;
};

// Demands with numerators in [0, 9] and denominators in [1, 3]; at least one
// pair is non-zero.
DemandFunction RandomDemands(int k, std::uint64_t seed);

struct SparsestCut {
  Rational ratio;
  std::vector<VertexId> witness;  // U, ascending
};

// Minimum of cap(delta(U)) / separated demand over all U, |V| <= 20. The
// witness is the lexicographically least minimizing U.
SparsestCut SparsestCutBruteforce(const TerminalGraph& g,
                                  const DemandFunction& d);
// Same value through terminal min-cuts: any U is dominated by the min cut of
// its terminal split. Works beyond 20 vertices.
SparsestCut SparsestCutViaTerminalCuts(const TerminalGraph& g,
                                       const DemandFunction& d);

// ---- comparison reports ------------------------------------------------

enum class EquivalenceMode { kReach, kCut, kDistance, kFlow };

std::optional<EquivalenceMode> ParseEquivalenceMode(std::string_view name);
std::string_view EquivalenceModeName(EquivalenceMode mode);

struct Mismatch {
  nlohmann::json witness;
  std::string expected;
  std::string actual;
};

struct EquivalenceReport {
  EquivalenceMode mode = EquivalenceMode::kReach;
  int compared = 0;
  std::vector<Mismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
  nlohmann::json ToJson() const;
};

struct EquivalenceOptions {
  int table_cap = 12;
  int demand_samples = 5;
  std::uint64_t seed = 1;
};

// Compares g and h on the quantity named by `mode`. Terminals are matched by
// position; throws PreconditionError when the terminal counts differ.
EquivalenceReport CompareGraphs(const TerminalGraph& g, const TerminalGraph& h,
                                EquivalenceMode mode,
                                const EquivalenceOptions& options = {});

}  // namespace vsparse

#endif  // VSPARSE_ORACLES_HPP_
