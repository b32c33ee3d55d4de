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

#ifndef VSPARSE_MINOR_HPP_
#define VSPARSE_MINOR_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

enum class MinorOpKind { kDeleteVertex, kDeleteEdge, kContractEdge };

// One minor operation. `tail`/`head` record the edge endpoints at the time
// the op was applied and `survivor` the merged vertex, so a replay can check
// it is acting on the same graph.
struct MinorOp {
  MinorOpKind kind = MinorOpKind::kDeleteVertex;
  VertexId vertex = kNoVertex;
  EdgeId edge = kNoEdge;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  VertexId survivor = kNoVertex;

  static MinorOp DeleteVertex(VertexId v);
  static MinorOp DeleteEdge(EdgeId e);
  static MinorOp ContractEdge(EdgeId e);
  friend bool operator==(const MinorOp&, const MinorOp&) = default;
};

// Output vertex id -> input vertices it stands for.
using BranchSets = std::map<VertexId, std::vector<VertexId>>;

struct MinorTrace {
  std::vector<MinorOp> ops;
  BranchSets branch_sets;
};

// Applies `op` to g in place and returns the op with endpoints and survivor
// filled in. Throws PreconditionError on stale references or when a
// contraction would merge two terminals.
MinorOp ApplyMinorOp(TerminalGraph& g, MinorOp op);

// Pure form.
std::pair<TerminalGraph, MinorOp> ApplyMinorOpCopy(const TerminalGraph& g,
                                                   const MinorOp& op);

// Replays ops (checking recorded endpoints when present).
TerminalGraph ReplayTrace(const TerminalGraph& input,
                          const std::vector<MinorOp>& ops);
BranchSets ComputeBranchSets(const TerminalGraph& input,
                             const std::vector<MinorOp>& ops);

// Records minor operations applied to a working copy of an input graph.
class MinorRecorder {
 public:
  explicit MinorRecorder(TerminalGraph input);

  const TerminalGraph& graph() const { return graph_; }
  void DeleteVertex(VertexId v);
  void DeleteEdge(EdgeId e);
  VertexId Contract(EdgeId e);
  // Deletes all but the lowest-id edge of every group of parallel edges
  // incident to v (directed: same orientation).
  void DropParallelAt(VertexId v);
  // Terminal relabelling is not a minor operation; it is allowed because the
  // terminal list only names vertices.
  void SetTerminals(std::vector<VertexId> terminals);
  const std::vector<MinorOp>& ops() const { return ops_; }
  void Append(const std::vector<MinorOp>& ops);

  std::pair<TerminalGraph, MinorTrace> Finish() &&;

 private:
  TerminalGraph graph_;
  std::vector<MinorOp> ops_;
  BranchSets branch_;
};

struct WitnessReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// True iff replaying trace on input reproduces output (up to order-preserving
// id compaction), the recorded branch sets (if any) match the replay, every
// input terminal lies in the branch set of the same-position output terminal,
// and every branch set induces a connected subgraph of the input.
WitnessReport CheckMinorWitness(const TerminalGraph& input,
                                const TerminalGraph& output,
                                const MinorTrace& trace);

nlohmann::json TraceToJson(const MinorTrace& trace);
MinorTrace TraceFromJson(const nlohmann::json& j);

}  // namespace vsparse

#endif  // VSPARSE_MINOR_HPP_
