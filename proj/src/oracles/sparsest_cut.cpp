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
#include <random>
#include <unordered_map>

#include "vsparse/errors.hpp"
#include "vsparse/oracles.hpp"

namespace vsparse {
namespace {

Rational SeparatedDemand(const DemandFunction& d, TerminalMask side) {
  Rational total;
  for (int i = 0; i < d.k(); ++i) {
    for (int j = i + 1; j < d.k(); ++j) {
      if (((side >> i) & 1U) != ((side >> j) & 1U)) total += d.at(i, j);
    }
  }
  return total;
}

}  // namespace

DemandFunction::DemandFunction(int k)
    : k_(k), d_(k, std::vector<Rational>(k)) {}

void DemandFunction::Set(int i, int j, Rational value) {
  if (i == j) throw PreconditionError("demand diagonal is fixed at zero");
  if (value.is_negative()) throw PreconditionError("negative demand");
  d_[i][j] = value;
  d_[j][i] = std::move(value);
}

DemandFunction DemandFunction::Scaled(const Rational& factor) const {
  DemandFunction out(k_);
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) out.Set(i, j, d_[i][j] * factor);
  }
  return out;
}

DemandFunction RandomDemands(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 9);
  std::uniform_int_distribution<int> den(1, 3);
  DemandFunction d(k);
  bool any = false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Rational v(num(rng), den(rng));
      any = any || !v.is_zero();
      d.Set(i, j, std::move(v));
    }
  }
  if (!any && k >= 2) d.Set(0, 1, Rational(1));
  return d;
}

SparsestCut SparsestCutBruteforce(const TerminalGraph& g,
                                  const DemandFunction& d) {
  const auto verts = g.Vertices();
  const int n = static_cast<int>(verts.size());
  if (n > 20) throw SizeGuardError("sparsest cut brute force beyond 20 vertices");
  if (g.directed()) throw PreconditionError("sparsest cut needs an undirected graph");
  if (d.k() != g.num_terminals()) {
    throw PreconditionError("demand size differs from terminal count");
  }
  std::vector<int> index(g.vertex_bound(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;

  std::vector<char> in_u(n, 0);
  TerminalMask terminal_side = 0;
  Rational cut;
  std::unordered_map<TerminalMask, Rational> demand_cache;
  std::optional<Rational> best_cut;
  Rational best_dem;
  std::vector<VertexId> best_u;

  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int bit = __builtin_ctzll(step);
    const VertexId v = verts[bit];
    for (EdgeId e : g.Incident(v)) {
      const int w = index[g.Other(e, v)];
      if (in_u[bit] != in_u[w]) {
        cut -= g.weight(e);
      } else {
        cut += g.weight(e);
      }
    }
    in_u[bit] ^= 1;
    if (const int t = g.TerminalIndex(v); t >= 0) terminal_side ^= TerminalMask{1} << t;

    auto it = demand_cache.find(terminal_side);
    if (it == demand_cache.end()) {
      it = demand_cache.emplace(terminal_side, SeparatedDemand(d, terminal_side)).first;
    }
    const Rational& dem = it->second;
    if (dem.is_zero()) continue;
    bool take = !best_cut;
    bool tie = false;
    if (best_cut) {
      const Rational lhs = cut * best_dem;
      const Rational rhs = *best_cut * dem;
      take = lhs < rhs;
      tie = lhs == rhs;
    }
    if (!take && !tie) continue;
    std::vector<VertexId> u;
    for (int i = 0; i < n; ++i) {
      if (in_u[i]) u.push_back(verts[i]);
    }
    if (take || u < best_u) {
      best_cut = cut;
      best_dem = dem;
      best_u = std::move(u);
    }
  }
  if (!best_cut) throw PreconditionError("every subset separates zero demand");
  return {*best_cut / best_dem, best_u};
}

SparsestCut SparsestCutViaTerminalCuts(const TerminalGraph& g,
                                       const DemandFunction& d) {
  const int k = g.num_terminals();
  if (d.k() != k) throw PreconditionError("demand size differs from terminal count");
  if (k > 24) throw SizeGuardError("too many terminals for terminal-cut route");
  std::optional<SparsestCut> best;
  if (k >= 2) {
    const TerminalMask rest = (TerminalMask{1} << (k - 1)) - 1;
    for (TerminalMask c = 0; c < rest; ++c) {
      const TerminalMask side = 1U | (c << 1);
      const Rational dem = SeparatedDemand(d, side);
      if (dem.is_zero()) continue;
      CutResult cut = TerminalMincut(g, side);
      Rational ratio = cut.value / dem;
      if (!best || ratio < best->ratio) {
        best = SparsestCut{std::move(ratio), std::move(cut.source_side)};
      }
    }
  }
  if (!best) throw PreconditionError("every subset separates zero demand");
  return *best;
}

}  // namespace vsparse
