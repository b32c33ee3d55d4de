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
#include <deque>
#include <sstream>

#include "vsparse/errors.hpp"
#include "vsparse/graph_io.hpp"
#include "vsparse/os_pipeline.hpp"
#include "vsparse/planarity.hpp"

namespace vsparse {
namespace {

using nlohmann::json;

std::vector<char> ReachedFromTerminals(const TerminalGraph& g, bool first_only) {
  std::vector<char> seen(g.vertex_bound(), 0);
  std::deque<VertexId> queue;
  for (VertexId t : g.terminals()) {
    if (!seen[t]) {
      seen[t] = 1;
      queue.push_back(t);
    }
    if (first_only) break;
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.Neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Renumbers g canonically and moves the layout along.
void Canonicalize(TerminalGraph& g, HalfGridLayout& layout) {
  std::vector<VertexId> rank(g.vertex_bound(), kNoVertex);
  VertexId next = 0;
  for (VertexId v : g.Vertices()) rank[v] = next++;
  for (int i = 1; i <= layout.size(); ++i) {
    for (int j = i; j <= layout.size(); ++j) layout.set(i, j, rank[layout.at(i, j)]);
  }
  g = CanonicalGraph(g);
}

StageRecord Stage(std::string name, const TerminalGraph& in, const TerminalGraph& out) {
  StageRecord r;
  r.stage = std::move(name);
  r.stats_in = GraphStats(in);
  r.stats_out = GraphStats(out);
  return r;
}

// Rule stage: records canonical input, the steps and the output.
template <typename Fn>
StageRecord RuleStage(std::string name, TerminalGraph& g, Fn&& run) {
  const TerminalGraph before = g;
  StageRecord r;
  r.input = SerializeGraph(g);
  r.steps = run(g);
  r.output = SerializeGraph(g);
  r.stage = std::move(name);
  r.stats_in = GraphStats(before);
  r.stats_out = GraphStats(g);
  r.detail["steps"] = r.steps.size();
  return r;
}

json PointJson(GridPoint p) { return json::array({p.row, p.col}); }

}  // namespace

int OsSizeBound(int k) { return (k + 4) * (k + 5) / 2; }

json StageRecord::ToJson() const {
  json j{{"stage", stage}, {"in", stats_in}, {"out", stats_out}, {"detail", detail}};
  if (input) j["input"] = *input;
  if (output) j["output"] = *output;
  if (!steps.empty() || input) {
    json lines = json::array();
    for (const auto& s : steps) lines.push_back(s.ToLine());
    j["steps"] = std::move(lines);
  }
  return j;
}

StageRecord StageRecord::FromJson(const json& j) {
  StageRecord r;
  r.stage = j.at("stage").get<std::string>();
  r.stats_in = j.value("in", json::object());
  r.stats_out = j.value("out", json::object());
  r.detail = j.value("detail", json::object());
  if (j.contains("input")) r.input = j.at("input").get<std::string>();
  if (j.contains("output")) r.output = j.at("output").get<std::string>();
  if (j.contains("steps")) {
    for (const auto& line : j.at("steps")) {
      r.steps.push_back(ReductionStep::FromLine(line.get<std::string>()));
    }
  }
  return r;
}

std::string PipelineLogToJsonLines(const std::vector<StageRecord>& log) {
  std::string out;
  for (const auto& r : log) out += r.ToJson().dump() + "\n";
  return out;
}

std::vector<StageRecord> PipelineLogFromJsonLines(std::string_view text) {
  std::vector<StageRecord> log;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      log.push_back(StageRecord::FromJson(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(number, e.what());
    } catch (const ParseError& e) {
      throw ParseError(number, e.what());
    }
  }
  return log;
}

LogReplayReport ReplayPipelineLog(const std::vector<StageRecord>& log) {
  LogReplayReport report;
  for (const auto& r : log) {
    if (!r.input) continue;
    json entry{{"stage", r.stage}, {"steps", r.steps.size()}};
    try {
      TerminalGraph g = ParseGraph(*r.input);
      ReplaySteps(g, r.steps);
      const bool same = r.output && SerializeGraph(g) == *r.output;
      entry["ok"] = same;
      if (!same) entry["error"] = "replayed graph differs from the recorded output";
    } catch (const std::exception& e) {
      entry["ok"] = false;
      entry["error"] = e.what();
    }
    report.ok = report.ok && entry["ok"].get<bool>();
    report.stages.push_back(std::move(entry));
  }
  return report;
}

OsSparsifier BuildSparsifierOs(const TerminalGraph& g, SparsifierMode mode) {
  if (g.directed()) throw PreconditionError("the planar pipeline needs an undirected graph");
  const WeightRole want = mode == SparsifierMode::kDistance ? WeightRole::kLength : WeightRole::kCapacity;
  if (g.role() != want) {
    throw PreconditionError(std::string(SparsifierModeName(mode)) + " mode needs " +
                            (want == WeightRole::kLength ? "lengths" : "capacities"));
  }
  if (!IsPlanar(g)) throw PreconditionError("graph is not planar");
  const RewriteMode rewrite = RewriteModeFor(mode);
  const int k = g.num_terminals();
  OsSparsifier result;
  result.mode = mode;

  // Stage 0: drop terminal-free components and merge parallel edges.
  TerminalGraph h = g;
  {
    const auto reached = ReachedFromTerminals(h, false);
    for (VertexId v : h.Vertices()) {
      if (!reached[v]) h.RemoveVertex(v);
    }
    if (mode == SparsifierMode::kDistance && k > 0) {
      const auto from_first = ReachedFromTerminals(h, true);
      for (VertexId t : h.terminals()) {
        if (!from_first[t]) throw PreconditionError("distance mode needs all terminals in one component");
      }
    }
    MergeParallelAt(h, h.Vertices());
    StageRecord r = Stage("prepare", g, h);
    r.detail["removed_vertices"] = g.num_vertices() - h.num_vertices();
    result.log.push_back(std::move(r));
  }
  if (k <= 1) {
    TerminalGraph out(false, g.role());
    for (int i = 0; i < k; ++i) out.AddVertex();
    std::vector<VertexId> terminals(k);
    for (int i = 0; i < k; ++i) terminals[i] = i;
    out.SetTerminals(terminals);
    result.log.push_back(Stage("trivial", h, out));
    result.graph = std::move(out);
    result.k_prime = k;
    return result;
  }

  result.fast_path = HasGridCoordinates(h);
  if (!result.fast_path) {
    h.ClearCoords();
    h = CanonicalGraph(h);
    result.log.push_back(RuleStage("pre-reduce", h, [](TerminalGraph& x) {
      return GreedyReduce(x, {.max_rule = 4});
    }));
    const Rational heavy = HeavyWeight(h, rewrite);
    SplitResult split = SplitVertices(h, heavy, 2);
    StageRecord r = Stage("split", h, split.graph);
    r.detail["heavy"] = heavy.str();
    result.log.push_back(std::move(r));
    h = std::move(split.graph);
  }

  // Padding never carries a cut (weight 0) or a shortest path (longer than all real edges).
  const Rational pad = rewrite == RewriteMode::kCut ? Rational(0) : h.TotalWeight() + Rational(1);
  const GridEmbedding embedding = OrthogonalGridEmbed(h, rewrite, HeavyWeight(h, rewrite));
  {
    StageRecord r = Stage("grid-embed", h, GridToGraph(embedding.grid, h.role(), pad));
    r.detail["fast_path"] = embedding.fast_path;
    r.detail["grid_size"] = embedding.grid.size;
    json points = json::object();
    for (VertexId v : h.Vertices()) {
      if (embedding.vertex_point[v]) points[std::to_string(v)] = PointJson(*embedding.vertex_point[v]);
    }
    r.detail["vertex_points"] = std::move(points);
    result.log.push_back(std::move(r));
  }

  const HalfGrid half = GridToHalfGrid(embedding.grid, rewrite);
  GitlerResult reduced = GitlerReduce(half, rewrite, pad);
  {
    StageRecord r;
    r.stage = "half-grid";
    r.stats_in = result.log.back().stats_out;
    r.stats_out = GraphStats(reduced.input);
    r.detail["size"] = half.size;
    result.log.push_back(std::move(r));
  }
  {
    StageRecord r;
    r.stage = "gitler";
    r.input = SerializeGraph(reduced.input);
    r.output = SerializeGraph(reduced.graph);
    r.steps = reduced.steps;
    r.stats_in = GraphStats(reduced.input);
    r.stats_out = GraphStats(reduced.graph);
    r.detail["steps"] = r.steps.size();
    r.detail["k_prime"] = reduced.k_prime;
    r.detail["promoted"] = reduced.promoted;
    result.log.push_back(std::move(r));
  }
  result.k_prime = reduced.k_prime;

  TerminalGraph out = std::move(reduced.graph);
  HalfGridLayout layout = std::move(reduced.layout);
  Canonicalize(out, layout);
  out.SetTerminals(std::vector<VertexId>(out.terminals().begin(), out.terminals().begin() + k));
  result.log.push_back(RuleStage("demote", out, [&layout](TerminalGraph& x) {
    std::vector<ReductionStep> steps;
    for (int d = layout.size(); d >= 1; --d) {
      if (x.IsTerminal(layout.at(d, d))) continue;
      auto more = EliminateDiagonalVertex(x, layout, d);
      steps.insert(steps.end(), more.begin(), more.end());
    }
    return steps;
  }));
  out = CanonicalGraph(out);
  result.log.push_back(RuleStage("cleanup", out, [](TerminalGraph& x) {
    return GreedyReduce(x, {.max_rule = 4});
  }));
  out = CanonicalGraph(out);
  if (mode == SparsifierMode::kFlow) {
    StageRecord r = Stage("flow-scale", out, out);
    r.detail["scale"] = result.scale.str();
    result.log.push_back(std::move(r));
  }
  result.graph = std::move(out);
  return result;
}

}  // namespace vsparse
