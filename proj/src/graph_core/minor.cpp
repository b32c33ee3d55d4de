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

#include "vsparse/minor.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "vsparse/errors.hpp"
#include "vsparse/graph_io.hpp"

namespace vsparse {
namespace {

void MergeInto(BranchSets& sets, VertexId keep, VertexId gone) {
  auto it = sets.find(gone);
  if (it == sets.end()) return;
  auto& dst = sets[keep];
  dst.insert(dst.end(), it->second.begin(), it->second.end());
  sets.erase(it);
}

// Applies `op` and keeps `sets` in step.
MinorOp ApplyTracked(TerminalGraph& g, MinorOp op, BranchSets& sets) {
  switch (op.kind) {
    case MinorOpKind::kDeleteVertex:
      g.RemoveVertex(op.vertex);
      sets.erase(op.vertex);
      return op;
    case MinorOpKind::kDeleteEdge:
    case MinorOpKind::kContractEdge: {
      if (!g.HasEdge(op.edge)) {
        throw PreconditionError("reference to deleted edge " +
                                std::to_string(op.edge));
      }
      const Edge& ed = g.edge(op.edge);
      if ((op.tail != kNoVertex && op.tail != ed.tail) ||
          (op.head != kNoVertex && op.head != ed.head)) {
        throw PreconditionError("edge " + std::to_string(op.edge) +
                                " endpoints differ from the recorded ones");
      }
      op.tail = ed.tail;
      op.head = ed.head;
      if (op.kind == MinorOpKind::kDeleteEdge) {
        g.RemoveEdge(op.edge);
        return op;
      }
      const VertexId a = op.tail;
      const VertexId b = op.head;
      op.survivor = g.Contract(op.edge, op.survivor);
      MergeInto(sets, op.survivor, op.survivor == a ? b : a);
      return op;
    }
  }
  return op;
}

BranchSets SingletonSets(const TerminalGraph& g) {
  BranchSets sets;
  for (VertexId v : g.Vertices()) sets.emplace_hint(sets.end(), v, std::vector<VertexId>{v});
  return sets;
}

void SortSets(BranchSets& sets) {
  for (auto& [v, s] : sets) std::sort(s.begin(), s.end());
}

std::string FirstDifference(const std::string& a, const std::string& b) {
  std::istringstream sa(a);
  std::istringstream sb(b);
  std::string la;
  std::string lb;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(sa, la));
    const bool hb = static_cast<bool>(std::getline(sb, lb));
    if (!ha && !hb) return "";
    if (!ha) la = "<eof>";
    if (!hb) lb = "<eof>";
    if (la != lb) {
      return "line " + std::to_string(line) + ": replayed '" + la +
             "' vs output '" + lb + "'";
    }
  }
}

const char* KindName(MinorOpKind k) {
  switch (k) {
    case MinorOpKind::kDeleteVertex:
      return "delete-vertex";
    case MinorOpKind::kDeleteEdge:
      return "delete-edge";
    case MinorOpKind::kContractEdge:
      return "contract-edge";
  }
  return "";
}

}  // namespace

MinorOp MinorOp::DeleteVertex(VertexId v) {
  MinorOp op;
  op.kind = MinorOpKind::kDeleteVertex;
  op.vertex = v;
  return op;
}

MinorOp MinorOp::DeleteEdge(EdgeId e) {
  MinorOp op;
  op.kind = MinorOpKind::kDeleteEdge;
  op.edge = e;
  return op;
}

MinorOp MinorOp::ContractEdge(EdgeId e) {
  MinorOp op;
  op.kind = MinorOpKind::kContractEdge;
  op.edge = e;
  return op;
}

MinorOp ApplyMinorOp(TerminalGraph& g, MinorOp op) {
  BranchSets unused;
  return ApplyTracked(g, op, unused);
}

std::pair<TerminalGraph, MinorOp> ApplyMinorOpCopy(const TerminalGraph& g,
                                                   const MinorOp& op) {
  TerminalGraph out = g;
  MinorOp done = ApplyMinorOp(out, op);
  return {std::move(out), done};
}

TerminalGraph ReplayTrace(const TerminalGraph& input,
                          const std::vector<MinorOp>& ops) {
  TerminalGraph g = input;
  BranchSets unused;
  for (const MinorOp& op : ops) ApplyTracked(g, op, unused);
  return g;
}

BranchSets ComputeBranchSets(const TerminalGraph& input,
                             const std::vector<MinorOp>& ops) {
  TerminalGraph g = input;
  BranchSets sets = SingletonSets(g);
  for (const MinorOp& op : ops) ApplyTracked(g, op, sets);
  SortSets(sets);
  return sets;
}

MinorRecorder::MinorRecorder(TerminalGraph input)
    : graph_(std::move(input)), branch_(SingletonSets(graph_)) {}

void MinorRecorder::DeleteVertex(VertexId v) {
  ops_.push_back(ApplyTracked(graph_, MinorOp::DeleteVertex(v), branch_));
}

void MinorRecorder::DeleteEdge(EdgeId e) {
  ops_.push_back(ApplyTracked(graph_, MinorOp::DeleteEdge(e), branch_));
}

VertexId MinorRecorder::Contract(EdgeId e) {
  ops_.push_back(ApplyTracked(graph_, MinorOp::ContractEdge(e), branch_));
  return ops_.back().survivor;
}

void MinorRecorder::DropParallelAt(VertexId v) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
  const std::vector<EdgeId> inc(graph_.Incident(v).begin(),
                                graph_.Incident(v).end());
  for (EdgeId e : inc) {
    const Edge& ed = graph_.edge(e);
    std::pair<VertexId, VertexId> key{ed.tail, ed.head};
    if (!graph_.directed() && key.second < key.first) {
      std::swap(key.first, key.second);
    }
    if (!seen.emplace(key, e).second) DeleteEdge(e);
  }
}

void MinorRecorder::SetTerminals(std::vector<VertexId> terminals) {
  graph_.SetTerminals(std::move(terminals));
}

void MinorRecorder::Append(const std::vector<MinorOp>& ops) {
  for (const MinorOp& op : ops) {
    ops_.push_back(ApplyTracked(graph_, op, branch_));
  }
}

std::pair<TerminalGraph, MinorTrace> MinorRecorder::Finish() && {
  SortSets(branch_);
  return {std::move(graph_), MinorTrace{std::move(ops_), std::move(branch_)}};
}

WitnessReport CheckMinorWitness(const TerminalGraph& input,
                                const TerminalGraph& output,
                                const MinorTrace& trace) {
  WitnessReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.problems.push_back(std::move(msg));
  };
  TerminalGraph replayed = input;
  BranchSets sets = SingletonSets(replayed);
  for (std::size_t i = 0; i < trace.ops.size(); ++i) {
    try {
      ApplyTracked(replayed, trace.ops[i], sets);
    } catch (const std::exception& e) {
      fail("op " + std::to_string(i) + " (" + KindName(trace.ops[i].kind) +
           "): " + e.what());
      return report;
    }
  }
  SortSets(sets);
  const std::string a = SerializeGraph(replayed);
  const std::string b = SerializeGraph(output);
  if (a != b) fail("replayed graph differs from output; " + FirstDifference(a, b));
  if (!trace.branch_sets.empty() && trace.branch_sets != sets) {
    fail("recorded branch sets differ from the replayed ones");
  }
  if (replayed.num_terminals() != input.num_terminals()) {
    fail("terminal count changed");
  }
  for (int i = 0; i < input.num_terminals(); ++i) {
    const VertexId t = input.terminals()[i];
    int hits = 0;
    for (const auto& [w, members] : sets) {
      if (std::binary_search(members.begin(), members.end(), t)) {
        ++hits;
        if (i < replayed.num_terminals() && w != replayed.terminals()[i]) {
          fail("terminal " + std::to_string(t) +
               " lands in a non-terminal branch set");
        }
      }
    }
    if (hits != 1) fail("terminal " + std::to_string(t) + " in " +
                        std::to_string(hits) + " branch sets");
  }
  std::vector<int> owner(input.vertex_bound(), -1);
  for (const auto& [w, members] : sets) {
    for (VertexId v : members) {
      if (owner[v] != -1) fail("branch sets overlap at " + std::to_string(v));
      owner[v] = w;
    }
  }
  for (const auto& [w, members] : sets) {
    std::vector<char> seen(input.vertex_bound(), 0);
    std::queue<VertexId> q;
    q.push(members.front());
    seen[members.front()] = 1;
    std::size_t reached = 0;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      ++reached;
      for (EdgeId e : input.Incident(v)) {
        const VertexId u = input.Other(e, v);
        if (!seen[u] && owner[u] == w) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    if (reached != members.size()) {
      fail("branch set of " + std::to_string(w) + " is not connected");
    }
  }
  return report;
}

nlohmann::json TraceToJson(const MinorTrace& trace) {
  nlohmann::json ops = nlohmann::json::array();
  for (const MinorOp& op : trace.ops) {
    nlohmann::json j{{"op", KindName(op.kind)}};
    if (op.kind == MinorOpKind::kDeleteVertex) {
      j["v"] = op.vertex;
    } else {
      j["e"] = op.edge;
      j["tail"] = op.tail;
      j["head"] = op.head;
      if (op.kind == MinorOpKind::kContractEdge) j["survivor"] = op.survivor;
    }
    ops.push_back(std::move(j));
  }
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& [w, members] : trace.branch_sets) {
    sets.push_back({w, members});
  }
  return {{"ops", std::move(ops)}, {"branch_sets", std::move(sets)}};
}

MinorTrace TraceFromJson(const nlohmann::json& j) {
  MinorTrace trace;
  for (const auto& o : j.at("ops")) {
    const std::string kind = o.at("op").get<std::string>();
    MinorOp op;
    if (kind == "delete-vertex") {
      op = MinorOp::DeleteVertex(o.at("v").get<VertexId>());
    } else if (kind == "delete-edge" || kind == "contract-edge") {
      op = kind == "delete-edge" ? MinorOp::DeleteEdge(o.at("e").get<EdgeId>())
                                 : MinorOp::ContractEdge(o.at("e").get<EdgeId>());
      op.tail = o.value("tail", kNoVertex);
      op.head = o.value("head", kNoVertex);
      op.survivor = o.value("survivor", kNoVertex);
    } else {
      throw PreconditionError("unknown trace op '" + kind + "'");
    }
    trace.ops.push_back(op);
  }
  if (j.contains("branch_sets")) {
    for (const auto& entry : j.at("branch_sets")) {
      trace.branch_sets[entry.at(0).get<VertexId>()] =
          entry.at(1).get<std::vector<VertexId>>();
    }
  }
  return trace;
}

}  // namespace vsparse
