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

#ifndef VSPARSE_WYE_DELTA_HPP_
#define VSPARSE_WYE_DELTA_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsparse/terminal_graph.hpp"

namespace vsparse {

enum class Rule {
  kDegreeOne = 1,
  kSeries = 2,
  kParallel = 3,
  kWyeDelta = 4,
  kDeltaWye = 5,
  kEdgeDeletion = 6,
  kEdgeReplacement = 7,
  kEdgeSubdivision = 8,
};

std::string_view RuleName(Rule rule);
std::optional<Rule> ParseRuleName(std::string_view name);

enum class RewriteMode { kCut, kDistance };

std::string_view RewriteModeName(RewriteMode mode);  // "cut" | "distance"
// Capacity graphs rewrite in cut mode, length graphs in distance mode.
// Throws PreconditionError for directed or unweighted graphs.
RewriteMode ModeOf(const TerminalGraph& g);

// Where a rule applies. Vertex roles by rule:
//   degree-one, series, wye-delta:  {x}, the non-terminal being removed
//   parallel:                       {a, b}, the endpoints of the bundle
//   delta-wye:                      {x, y, z}, the triangle
//   edge-deletion:                  {x, u, v}, non-terminal x of degree 2 or 3
//                                   and the edge (u, v) to remove
//   edge-replacement:               {c, x, u}, degree-4 non-terminal c and the
//                                   edge (x, u) to push across it
//   edge-subdivision:               edges {e}
struct Site {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  friend bool operator==(const Site&, const Site&) = default;
};

struct EdgeWrite {
  EdgeId edge = kNoEdge;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  Rational weight;
  friend bool operator==(const EdgeWrite&, const EdgeWrite&) = default;
};

// An edge lowered before the rule fired so that its preconditions hold.
struct Normalization {
  EdgeId edge = kNoEdge;
  Rational before;
  Rational after;
  friend bool operator==(const Normalization&, const Normalization&) = default;
};

// One primitive application (rules 1-5 and subdivision).
struct ReductionStep {
  Rule rule = Rule::kDegreeOne;
  RewriteMode mode = RewriteMode::kCut;
  Site site;
  std::vector<EdgeWrite> writes;  // edges created or re-weighted, in order
  std::optional<Normalization> normalization;
  VertexId new_vertex = kNoVertex;

  // "step <rule> <mode> v=<ids> e=<ids> new=<edge>:<tail>-<head>:<w>,...
  //  norm=<edge>:<before>:<after> add=<vertex>" with "-" for empty fields.
  std::string ToLine() const;
  // Throws ParseError (line 0) on malformed input.
  static ReductionStep FromLine(std::string_view line);
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Repairs the weight precondition of wye-delta in cut mode
// (c(w,x) <= c(u,x) + c(v,x) for every labelling) and of delta-wye in
// distance mode (triangle inequality on the three edges). Other rule/mode
// combinations need no repair. Returns the repair made, if any; throws
// PreconditionError when the site does not have the rule's shape.
std::optional<Normalization> NormalizeSite(TerminalGraph& g, Rule rule, const Site& site);

// Applies a primitive rule in place (normalizing first where needed).
// Throws PreconditionError on a shape mismatch or a terminal where the rule
// needs a non-terminal.
ReductionStep ApplyRule(TerminalGraph& g, Rule rule, const Site& site);

// Applies edge-deletion, edge-replacement or edge-subdivision as its primitive
// sequence, then merges parallel edges around the touched vertices.
std::vector<ReductionStep> ApplyComposite(TerminalGraph& g, Rule rule, const Site& site);

// Merges every parallel bundle touching the given vertices (ascending).
std::vector<ReductionStep> MergeParallelAt(TerminalGraph& g, std::vector<VertexId> vertices);

struct GreedyPolicy {
  int max_rule = 4;  // rules 1..max_rule (at most 4) are eligible
};

// Repeatedly applies the lowest-numbered applicable rule at the lowest site
// until none applies.
std::vector<ReductionStep> GreedyReduce(TerminalGraph& g, const GreedyPolicy& policy = {});

// Re-applies each step's rule at its site, checking that the recorded writes
// are reproduced. Throws PreconditionError on divergence.
void ReplaySteps(TerminalGraph& g, const std::vector<ReductionStep>& steps);

std::string StepLogToText(const std::vector<ReductionStep>& steps);
// Blank lines and '#' comments are skipped. Throws ParseError with the line.
std::vector<ReductionStep> StepLogFromText(std::string_view text);

}  // namespace vsparse

#endif  // VSPARSE_WYE_DELTA_HPP_
