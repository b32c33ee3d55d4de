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

// vsparse: generate instances, build sparsifiers, verify and replay them.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsparse/errors.hpp"
#include "vsparse/graph_io.hpp"
#include "vsparse/instances.hpp"
#include "vsparse/minor.hpp"
#include "vsparse/oracles.hpp"
#include "vsparse/os_pipeline.hpp"
#include "vsparse/pair_set.hpp"
#include "vsparse/planar_reach.hpp"
#include "vsparse/planarity.hpp"
#include "vsparse/reach_minor.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vsparse;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// A usage or input problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mode;
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
  int k = 0;
  int n = 0;
  int m = 0;
  std::string family;
  int t = 3;
  int cap = 12;
  int jobs = 1;
};

const std::vector<std::string> kModes = {"reach", "reach-planar", "cut", "distance", "flow"};
const std::vector<std::string> kFamilies = {"digraph", "dag", "planar-digraph", "os", "lb-grid",
                                            "incompressibility"};

bool IsReachMode(const std::string& mode) { return mode == "reach" || mode == "reach-planar"; }

// A directory argument stands for the graph.txt inside it.
fs::path GraphPath(const std::string& arg) {
  const fs::path p(arg);
  return fs::is_directory(p) ? p / "graph.txt" : p;
}

void WriteJson(const fs::path& path, const json& j) { WriteTextFile(path.string(), j.dump(2) + "\n"); }

json ReadJson(const fs::path& path) {
  try {
    return json::parse(ReadTextFile(path.string()));
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void Require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

// ---- gen ----------------------------------------------------------------------

int RunGen(const RunConfig& cfg) {
  Require(cfg.seed.has_value(), "gen needs --seed");
  Require(!cfg.out.empty(), "gen needs --out DIR");
  const std::uint64_t seed = *cfg.seed;
  json params = json::object();
  json extra = json::object();
  TerminalGraph g;
  if (cfg.family == "digraph" || cfg.family == "dag" || cfg.family == "planar-digraph") {
    DigraphParams p{cfg.n, cfg.m, cfg.k, cfg.family == "dag", cfg.family == "planar-digraph"};
    params = {{"n", p.n}, {"m", p.m}, {"k", p.k}, {"acyclic", p.acyclic}, {"planar", p.planar}};
    g = GenRandomDigraph(p, seed);
  } else if (cfg.family == "os") {
    const std::string mode = cfg.mode.empty() ? "cut" : cfg.mode;
    Require(mode == "cut" || mode == "distance" || mode == "flow", "os family takes --mode cut|distance|flow");
    params = {{"n", cfg.n}, {"k", cfg.k}, {"mode", mode}};
    g = GenOsInstance(cfg.n, cfg.k, mode == "distance" ? WeightRole::kLength : WeightRole::kCapacity, seed);
  } else if (cfg.family == "lb-grid") {
    params = {{"k", cfg.k}};
    g = GenLbGrid(cfg.k);
  } else if (cfg.family == "incompressibility") {
    params = {{"k", cfg.k}, {"t", cfg.t}};
    const SteinerTripleSystem sts = GenSts(cfg.k);
    const std::vector<int> subset = DetouringSubset(sts, cfg.t, seed);
    std::mt19937_64 rng(seed);
    std::vector<int> kept;
    for (int i : subset) {
      if (std::bernoulli_distribution(0.5)(rng)) kept.push_back(i);
    }
    g = GenIncompressibilityFamily(sts, subset, kept);
    extra = {{"subset", subset}, {"kept", kept}};
  } else {
    throw UsageError("unknown --family '" + cfg.family + "'");
  }
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  WriteTextFile((dir / "graph.txt").string(), SerializeGraph(g));
  json manifest{{"family", cfg.family}, {"params", params}, {"seed", seed},
                {"k", g.num_terminals()}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
  if (!extra.empty()) manifest["construction"] = extra;
  WriteJson(dir / "manifest.json", manifest);
  std::cout << manifest.dump() << "\n";
  return kExitOk;
}

// ---- sparsify ----------------------------------------------------------------------

int RunSparsify(const RunConfig& cfg) {
  Require(!cfg.in.empty() && !cfg.out.empty(), "sparsify needs --in GRAPH and --out DIR");
  const TerminalGraph g = ReadGraphFile(GraphPath(cfg.in).string());
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  json stats{{"mode", cfg.mode}, {"input", GraphStats(g)}};
  TerminalGraph out;
  if (IsReachMode(cfg.mode)) {
    Require(g.directed(), cfg.mode + " mode needs a directed graph");
    json result;
    ReachSparsifier s;
    if (cfg.mode == "reach") {
      const PairSet pairs = TrivialPairSet(g);
      s = MinorSparsify(g, pairs);
      result = ReachResultJson(pairs, s);
    } else {
      PlanarReachResult r = SparsifyPlanarReach(g);
      result = PlanarReachJson(r);
      result.update(ReachResultJson(r.reduced_pairs, r.result));
      s = std::move(r.result);
    }
    WriteJson(dir / "trace.json", TraceToJson(s.trace));
    stats["result"] = result;
    out = std::move(s.graph);
  } else {
    const auto mode = ParseSparsifierMode(cfg.mode);
    Require(mode.has_value(), "unknown --mode '" + cfg.mode + "'");
    OsSparsifier s = BuildSparsifierOs(g, *mode);
    WriteTextFile((dir / "log.jsonl").string(), PipelineLogToJsonLines(s.log));
    stats["result"] = {{"k_prime", s.k_prime},
                       {"fast_path", s.fast_path},
                       {"scale", s.scale.str()},
                       {"size_bound", OsSizeBound(g.num_terminals())},
                       {"stages", s.log.size()}};
    out = std::move(s.graph);
  }
  stats["output"] = GraphStats(out);
  WriteTextFile((dir / "input.txt").string(), SerializeGraph(g));
  WriteTextFile((dir / "graph.txt").string(), SerializeGraph(out));
  WriteJson(dir / "stats.json", stats);
  std::cout << stats.dump() << "\n";
  return kExitOk;
}

// ---- verify ------------------------------------------------------------------------

json Check(std::string name, bool ok, json detail = json::object()) {
  return {{"check", std::move(name)}, {"ok", ok}, {"detail", std::move(detail)}};
}

int RunVerify(const RunConfig& cfg) {
  Require(!cfg.in.empty() && !cfg.out.empty(), "verify needs --in GRAPH and --out DIR");
  const TerminalGraph g = ReadGraphFile(GraphPath(cfg.in).string());
  const fs::path dir(cfg.out);
  const TerminalGraph h = ReadGraphFile(GraphPath(cfg.out).string());
  const auto mode = ParseEquivalenceMode(IsReachMode(cfg.mode) ? "reach" : cfg.mode);
  Require(mode.has_value(), "unknown --mode '" + cfg.mode + "'");
  EquivalenceOptions options;
  options.table_cap = cfg.cap;
  options.seed = cfg.seed.value_or(1);

  const auto launch = cfg.jobs > 1 ? std::launch::async : std::launch::deferred;
  std::vector<std::future<json>> checks;
  checks.push_back(std::async(launch, [&] {
    const EquivalenceReport report = CompareGraphs(g, h, *mode, options);
    return Check("equivalence", report.pass(), report.ToJson());
  }));
  const fs::path trace_path = dir / "trace.json";
  if (IsReachMode(cfg.mode) && fs::is_directory(dir) && fs::exists(trace_path)) {
    const MinorTrace trace = TraceFromJson(ReadJson(trace_path));
    checks.push_back(std::async(launch, [&g, &h, trace] {
      const WitnessReport w = CheckMinorWitness(g, h, trace);
      return Check("minor-witness", w.ok, json{{"problems", w.problems}});
    }));
  }
  if (!IsReachMode(cfg.mode)) {
    checks.push_back(std::async(launch, [&] {
      const int bound = OsSizeBound(g.num_terminals());
      return Check("size-bound", h.num_vertices() <= bound,
                   json{{"vertices", h.num_vertices()}, {"bound", bound}});
    }));
    checks.push_back(std::async(launch, [&] { return Check("planar", IsPlanar(h)); }));
  }
  json report{{"mode", cfg.mode}, {"checks", json::array()}};
  bool ok = true;
  for (auto& c : checks) {
    json result = c.get();
    ok = ok && result["ok"].get<bool>();
    report["checks"].push_back(std::move(result));
  }
  report["pass"] = ok;
  if (fs::is_directory(dir)) WriteJson(dir / "verify.json", report);
  std::cout << report.dump() << "\n";
  return ok ? kExitOk : kExitMismatch;
}

// ---- replay ------------------------------------------------------------------------

int RunReplay(const RunConfig& cfg) {
  Require(!cfg.in.empty(), "replay needs --in DIR (a sparsify output directory)");
  const fs::path dir(cfg.in);
  Require(fs::is_directory(dir), cfg.in + " is not a directory");
  json report;
  bool ok = false;
  if (fs::exists(dir / "trace.json")) {
    const TerminalGraph input = ReadGraphFile((dir / "input.txt").string());
    const TerminalGraph output = ReadGraphFile((dir / "graph.txt").string());
    const MinorTrace trace = TraceFromJson(ReadJson(dir / "trace.json"));
    WitnessReport w;
    try {
      w = CheckMinorWitness(input, output, trace);
    } catch (const PreconditionError& e) {
      w.ok = false;
      w.problems.push_back(e.what());
    }
    ok = w.ok;
    report = {{"kind", "minor-trace"}, {"ops", trace.ops.size()}, {"problems", w.problems}};
  } else if (fs::exists(dir / "log.jsonl")) {
    std::vector<StageRecord> log;
    try {
      log = PipelineLogFromJsonLines(ReadTextFile((dir / "log.jsonl").string()));
    } catch (const ParseError& e) {
      throw UsageError(std::string("log.jsonl ") + e.what());
    }
    const LogReplayReport r = ReplayPipelineLog(log);
    ok = r.ok;
    bool ends_at_output = false;
    if (!log.empty() && fs::exists(dir / "graph.txt")) {
      for (auto it = log.rbegin(); it != log.rend(); ++it) {
        if (!it->output) continue;
        ends_at_output = *it->output == SerializeGraph(ReadGraphFile((dir / "graph.txt").string()));
        break;
      }
      // Logs without rule stages (k <= 1) have nothing to replay.
      if (std::none_of(log.begin(), log.end(), [](const StageRecord& s) { return s.output.has_value(); })) {
        ends_at_output = true;
      }
    }
    ok = ok && ends_at_output;
    report = {{"kind", "pipeline-log"}, {"stages", r.stages}, {"ends_at_output", ends_at_output}};
  } else {
    throw UsageError(cfg.in + " holds neither trace.json nor log.jsonl");
  }
  report["pass"] = ok;
  std::cout << report.dump() << "\n";
  return ok ? kExitOk : kExitMismatch;
}

// ---- stats -------------------------------------------------------------------------

int RunStats(const RunConfig& cfg) {
  Require(!cfg.in.empty(), "stats needs --in GRAPH");
  const json stats = GraphStats(ReadGraphFile(GraphPath(cfg.in).string()));
  if (!cfg.out.empty()) WriteJson(cfg.out, stats);
  std::cout << stats.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex sparsifiers for reachability, cuts, distances and flows"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "input graph file or directory");
    sub->add_option("--out", cfg.out, "output file or directory");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  add_common(gen);
  gen->add_option("--family", cfg.family, "instance family")->required()->check(CLI::IsMember(kFamilies));
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--n", cfg.n, "vertices");
  gen->add_option("--m", cfg.m, "edges");
  gen->add_option("--k", cfg.k, "terminals");
  gen->add_option("--t", cfg.t, "detour length bound");
  gen->add_option("--mode", cfg.mode, "weight mode of the os family");

  CLI::App* sparsify = app.add_subcommand("sparsify", "build a sparsifier");
  add_common(sparsify);
  sparsify->add_option("--mode", cfg.mode, "sparsifier kind")->required()->check(CLI::IsMember(kModes));

  CLI::App* verify = app.add_subcommand("verify", "compare a graph with its sparsifier");
  add_common(verify);
  verify->add_option("--mode", cfg.mode, "quantity to compare")->required()->check(CLI::IsMember(kModes));
  verify->add_option("--cap", cfg.cap, "largest terminal count for full cut tables");
  verify->add_option("--seed", cfg.seed, "seed of the sampled demands");

  CLI::App* replay = app.add_subcommand("replay", "replay the trace or log of a sparsify run");
  add_common(replay);

  CLI::App* stats = app.add_subcommand("stats", "print graph statistics");
  add_common(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return RunGen(cfg);
    if (sparsify->parsed()) return RunSparsify(cfg);
    if (verify->parsed()) return RunVerify(cfg);
    if (replay->parsed()) return RunReplay(cfg);
    return RunStats(cfg);
  } catch (const std::exception& e) {
    std::cerr << "vsparse: " << e.what() << "\n";
    return kExitUsage;
  }
}
