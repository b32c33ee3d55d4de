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

#ifndef VSPARSE_INSTANCES_HPP_
#define VSPARSE_INSTANCES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsparse/minor.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// ---- random families ------------------------------------------------------

struct DigraphParams {
  int n = 0;
  int m = 0;
  int k = 0;
  bool acyclic = false;
  // Cells of a near-square grid (row-major prefix of n cells), m of the grid
  // edges randomly oriented, terminals on the boundary of the shape.
  bool planar = false;
};

// Throws PreconditionError on infeasible parameters.
TerminalGraph GenRandomDigraph(const DigraphParams& params, std::uint64_t seed);

// floor(sqrt(n)) x floor(n / rows) grid with random non-bridge edges removed,
// k terminals on the outer rows/columns, random positive weights. Carries
// grid coordinates. `role` is kCapacity or kLength.
TerminalGraph GenOsInstance(int n, int k, WeightRole role, std::uint64_t seed);

// ---- directed grid lower bound --------------------------------------------

// (r+1) x (r+1) grid with r = k / 4, corners and boundary-to-boundary edges
// removed, edges pointing right and down. The 4r - 4 boundary vertices are
// terminals, listed left side (top to bottom), right side, top side (left to
// right), bottom side. Requires k % 4 == 0 and k >= 8.
TerminalGraph GenLbGrid(int k);

struct LbGridReport {
  bool ok = true;
  int side = 0;           // terminals per side, r - 1
  int intersections = 0;  // distinct horizontal/vertical meeting points found
  std::vector<std::string> problems;
  nlohmann::json ToJson() const;
};

// Checks the generator's postconditions on g. With `minor`, checks that in the
// minor the chosen terminal dipaths of each family are pairwise disjoint and
// that every horizontal path meets every vertical one at a non-terminal.
LbGridReport VerifyLbGrid(const TerminalGraph& g,
                          const TerminalGraph* minor = nullptr);

// ---- Steiner triple systems -----------------------------------------------

using Triple = std::array<int, 3>;  // ascending

struct SteinerTripleSystem {
  int k = 0;
  std::vector<Triple> triples;
};

// Bose construction for k = 3 (mod 6), Skolem for k = 1 (mod 6). The
// exact-cover property is checked before returning.
SteinerTripleSystem GenSts(int k);

// True iff every 2-subset of [k] lies in exactly one triple.
bool IsSteinerTripleSystem(const SteinerTripleSystem& sts);

// Smallest detouring cycle length (3..max_len) among the listed triples, or
// nullopt when none of length <= max_len exists.
std::optional<int> ShortestDetouringCycle(const std::vector<Triple>& triples,
                                          int max_len);

// Indices into sts.triples (ascending) whose induced detouring graph has no
// detouring cycle of length <= t: random inclusion, deletion of one triple per
// short cycle, then greedy growth in random order.
std::vector<int> DetouringSubset(const SteinerTripleSystem& sts, int t,
                                 std::uint64_t seed);

// Terminals 0..k-1, then one non-terminal per chosen triple (k + i for the
// i-th entry of `subset`) joined to its three points; for triples outside
// `kept` the edge to the smallest point is left out. Unit lengths.
// `kept` must be a subset of `subset` (both index lists into sts.triples).
TerminalGraph GenIncompressibilityFamily(const SteinerTripleSystem& sts,
                                         const std::vector<int>& subset,
                                         const std::vector<int>& kept);

struct IncompressibilityReport {
  bool ok = true;
  int covered = 0;
  int uncovered_respecting = 0;
  std::vector<std::string> problems;
  nlohmann::json ToJson() const;
};

// Covered pairs must be at distance 2, uncovered pairs whose triple is in
// `subset` at distance >= 2t.
IncompressibilityReport VerifyIncompressibilityClaims(
    const SteinerTripleSystem& sts, const std::vector<int>& subset,
    const std::vector<int>& kept, int t, const TerminalGraph& g);

}  // namespace vsparse

#endif  // VSPARSE_INSTANCES_HPP_
