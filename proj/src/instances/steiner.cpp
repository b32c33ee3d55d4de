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
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "vsparse/errors.hpp"
#include "vsparse/instances.hpp"

namespace vsparse {
namespace {

Triple Sorted(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Bose: points (x, i) with x in Z_n (n odd), i in Z_3, id x + n i.
std::vector<Triple> Bose(int k) {
  const int n = k / 3;
  const int half = (n + 1) / 2;  // inverse of 2 mod n
  auto op = [&](int x, int y) { return ((x + y) * half) % n; };
  auto id = [n](int x, int i) { return x + n * (i % 3); };
  std::vector<Triple> out;
  for (int x = 0; x < n; ++x) out.push_back(Sorted(id(x, 0), id(x, 1), id(x, 2)));
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) out.push_back(Sorted(id(x, i), id(y, i), id(op(x, y), i + 1)));
    }
  }
  return out;
}

// Skolem: points (x, i) with x in Z_2n, i in Z_3, id x + 2n i, plus 6n.
std::vector<Triple> Skolem(int k) {
  const int n = (k - 1) / 6;
  const int m = 2 * n;
  // Half-idempotent: relabel sums 2j -> j and 2j+1 -> n+j.
  auto op = [&](int x, int y) {
    const int s = (x + y) % m;
    return s % 2 == 0 ? s / 2 : n + s / 2;
  };
  auto id = [m](int x, int i) { return x + m * (i % 3); };
  const int inf = 3 * m;
  std::vector<Triple> out;
  for (int x = 0; x < n; ++x) out.push_back(Sorted(id(x, 0), id(x, 1), id(x, 2)));
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) out.push_back(Sorted(inf, id(x + n, i), id(x, i + 1)));
  }
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) out.push_back(Sorted(id(x, i), id(y, i), id(op(x, y), i + 1)));
    }
  }
  return out;
}

int SharedPoint(const Triple& a, const Triple& b) {
  int shared = -1;
  int count = 0;
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      shared = x;
      ++count;
    }
  }
  return count == 1 ? shared : -1;
}

// Intersection graph of triples meeting in exactly one point, edges labelled
// by that point.
class DetouringGraph {
 public:
  explicit DetouringGraph(const std::vector<Triple>& triples)
      : adj_(triples.size()) {
    for (std::size_t a = 0; a < triples.size(); ++a) {
      for (std::size_t b = a + 1; b < triples.size(); ++b) {
        const int label = SharedPoint(triples[a], triples[b]);
        if (label < 0) continue;
        adj_[a].push_back({static_cast<int>(b), label});
        adj_[b].push_back({static_cast<int>(a), label});
      }
    }
  }

  // A detouring cycle of length <= max_len through `start` using only active
  // vertices (with index > start when `above`); empty when none exists.
  std::vector<int> CycleThrough(int start, int max_len, const std::vector<char>& active,
                                bool above) const {
    best_.clear();
    path_ = {start};
    labels_.clear();
    on_path_.assign(adj_.size(), 0);
    on_path_[start] = 1;
    Extend(start, max_len, active, above);
    return best_;
  }

 private:
  struct Arc {
    int to;
    int label;
  };

  void Extend(int start, int max_len, const std::vector<char>& active, bool above) const {
    const int v = path_.back();
    const int len = static_cast<int>(path_.size());
    for (const Arc& arc : adj_[v]) {
      if (!labels_.empty() && arc.label == labels_.back()) continue;
      if (arc.to == start) {
        if (len >= 3 && arc.label != labels_.front() &&
            (best_.empty() || len < static_cast<int>(best_.size()))) {
          best_ = path_;
        }
        continue;
      }
      if (len >= max_len || on_path_[arc.to] || !active[arc.to]) continue;
      if (above && arc.to < start) continue;
      if (!best_.empty() && len + 1 >= static_cast<int>(best_.size())) continue;
      on_path_[arc.to] = 1;
      path_.push_back(arc.to);
      labels_.push_back(arc.label);
      Extend(start, max_len, active, above);
      labels_.pop_back();
      path_.pop_back();
      on_path_[arc.to] = 0;
    }
  }

  std::vector<std::vector<Arc>> adj_;
  mutable std::vector<int> best_;
  mutable std::vector<int> path_;
  mutable std::vector<int> labels_;
  mutable std::vector<char> on_path_;
};

// Shortest short detouring cycle among active vertices, or empty.
std::vector<int> AnyCycle(const DetouringGraph& dg, int max_len,
                          const std::vector<char>& active) {
  std::vector<int> best;
  for (std::size_t s = 0; s < active.size(); ++s) {
    if (!active[s]) continue;
    auto cycle = dg.CycleThrough(static_cast<int>(s), max_len, active, /*above=*/true);
    if (!cycle.empty() && (best.empty() || cycle.size() < best.size())) best = std::move(cycle);
  }
  return best;
}

}  // namespace

SteinerTripleSystem GenSts(int k) {
  SteinerTripleSystem sts;
  sts.k = k;
  if (k >= 3 && k % 6 == 3) {
    sts.triples = Bose(k);
  } else if (k >= 1 && k % 6 == 1) {
    sts.triples = Skolem(k);
  } else {
    throw PreconditionError("Steiner triple systems need k = 1 or 3 (mod 6), got " +
                            std::to_string(k));
  }
  std::sort(sts.triples.begin(), sts.triples.end());
  if (!IsSteinerTripleSystem(sts)) throw std::logic_error("triple system construction failed");
  return sts;
}

bool IsSteinerTripleSystem(const SteinerTripleSystem& sts) {
  const int k = sts.k;
  std::vector<int> covered(static_cast<std::size_t>(k) * k, 0);
  for (const Triple& t : sts.triples) {
    for (int a = 0; a < 3; ++a) {
      if (t[a] < 0 || t[a] >= k) return false;
      for (int b = a + 1; b < 3; ++b) {
        if (t[a] == t[b]) return false;
        ++covered[t[a] * k + t[b]];
        ++covered[t[b] * k + t[a]];
      }
    }
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x != y && covered[x * k + y] != 1) return false;
    }
  }
  return true;
}

std::optional<int> ShortestDetouringCycle(const std::vector<Triple>& triples, int max_len) {
  const DetouringGraph dg(triples);
  const auto cycle = AnyCycle(dg, max_len, std::vector<char>(triples.size(), 1));
  if (cycle.empty()) return std::nullopt;
  return static_cast<int>(cycle.size());
}

std::vector<int> DetouringSubset(const SteinerTripleSystem& sts, int t, std::uint64_t seed) {
  if (t < 3) throw PreconditionError("detouring subsets need t >= 3");
  const DetouringGraph dg(sts.triples);
  const std::size_t r = sts.triples.size();
  std::mt19937_64 rng(seed);
  const double rate =
      std::pow(static_cast<double>(sts.k), 1.0 / (t - 1) - 1.0) / 4.0;
  std::bernoulli_distribution include(std::min(1.0, rate));
  std::vector<char> active(r, 0);
  for (std::size_t i = 0; i < r; ++i) active[i] = include(rng) ? 1 : 0;
  for (auto cycle = AnyCycle(dg, t, active); !cycle.empty(); cycle = AnyCycle(dg, t, active)) {
    active[*std::max_element(cycle.begin(), cycle.end())] = 0;
  }
  std::vector<int> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i : order) {
    if (active[i]) continue;
    active[i] = 1;
    if (!dg.CycleThrough(i, t, active, /*above=*/false).empty()) active[i] = 0;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < r; ++i) {
    if (active[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

TerminalGraph GenIncompressibilityFamily(const SteinerTripleSystem& sts,
                                         const std::vector<int>& subset,
                                         const std::vector<int>& kept) {
  const std::set<int> chosen(subset.begin(), subset.end());
  for (int i : kept) {
    if (!chosen.contains(i)) {
      throw PreconditionError("kept triple " + std::to_string(i) + " is not in the subset");
    }
  }
  const std::set<int> keep(kept.begin(), kept.end());
  TerminalGraph g = TerminalGraph::WithVertices(
      false, WeightRole::kLength, sts.k + static_cast<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const VertexId hub = sts.k + static_cast<VertexId>(i);
    const Triple& tr = sts.triples.at(subset[i]);
    for (int j = keep.contains(subset[i]) ? 0 : 1; j < 3; ++j) g.AddEdge(hub, tr[j], Rational(1));
  }
  std::vector<VertexId> terms(sts.k);
  for (int x = 0; x < sts.k; ++x) terms[x] = x;
  g.SetTerminals(std::move(terms));
  return g;
}

IncompressibilityReport VerifyIncompressibilityClaims(
    const SteinerTripleSystem& sts, const std::vector<int>& subset,
    const std::vector<int>& kept, int t, const TerminalGraph& g) {
  IncompressibilityReport report;
  const std::set<int> chosen(subset.begin(), subset.end());
  const std::set<int> keep(kept.begin(), kept.end());
  std::map<std::pair<int, int>, int> triple_of;
  for (std::size_t i = 0; i < sts.triples.size(); ++i) {
    const Triple& tr = sts.triples[i];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) triple_of[{tr[a], tr[b]}] = static_cast<int>(i);
    }
  }
  const DistanceMatrix d = TerminalDistanceMatrix(g);
  const Rational far(2 * t);
  for (int x = 0; x < sts.k; ++x) {
    for (int y = x + 1; y < sts.k; ++y) {
      const int i = triple_of.at({x, y});
      if (!chosen.contains(i)) continue;
      const int first = sts.triples[i][0];
      const bool covered = keep.contains(i) || (x != first && y != first);
      const Distance& dist = d[x][y];
      if (covered) {
        ++report.covered;
        if (dist != Distance(Rational(2))) {
          report.problems.push_back("covered pair (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") at distance " + dist.str());
        }
      } else {
        ++report.uncovered_respecting;
        if (dist.finite() && dist.value() < far) {
          report.problems.push_back("uncovered pair (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") at distance " + dist.str());
        }
      }
    }
  }
  report.ok = report.problems.empty();
  return report;
}

nlohmann::json IncompressibilityReport::ToJson() const {
  return {{"ok", ok},
          {"covered", covered},
          {"uncovered_respecting", uncovered_respecting},
          {"problems", problems}};
}

}  // namespace vsparse
