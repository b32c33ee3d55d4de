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

#ifndef VSPARSE_OS_PIPELINE_HPP_
#define VSPARSE_OS_PIPELINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vsparse/terminal_graph.hpp"
#include "vsparse/wye_delta.hpp"

namespace vsparse {

// ---- modes ------------------------------------------------------------------

enum class SparsifierMode { kCut, kDistance, kFlow };

std::string_view SparsifierModeName(SparsifierMode mode);  // "cut" | "distance" | "flow"
std::optional<SparsifierMode> ParseSparsifierMode(std::string_view name);
// Flow rewrites exactly like cut.
RewriteMode RewriteModeFor(SparsifierMode mode);

// ---- vertex splitting --------------------------------------------------------

struct SplitResult {
  TerminalGraph graph;
  std::vector<VertexId> origin;  // input vertex of every output vertex
};

// Replaces every vertex whose degree exceeds 3 (terminals: `max_terminal_degree`)
// by a path of copies, one per incident edge in rotation order, joined by
// `heavy` edges. A split terminal keeps exactly one terminal copy, chosen on
// the terminal face. Output ids are fresh and compact. Throws
// PreconditionError when g is not planar or its terminals share no face.
SplitResult SplitVertices(const TerminalGraph& g, const Rational& heavy,
                          int max_terminal_degree = 3);

// Weight of the joining edges: total capacity + 1 in cut mode, 0 in distance mode.
Rational HeavyWeight(const TerminalGraph& g, RewriteMode mode);

// ---- grids ----------------------------------------------------------------

// Unordered pair of adjacent lattice points, smaller point first.
using PointPair = std::pair<GridPoint, GridPoint>;
PointPair MakePointPair(GridPoint a, GridPoint b);

// Square grid on points (1..size, 1..size). Absent edges are padding.
struct GridGraph {
  int size = 0;
  std::map<PointPair, Rational> weights;
  std::map<GridPoint, int> terminals;  // point -> terminal position

  bool OnBoundary(GridPoint p) const;
};

// Node embedding of a graph into a grid.
struct GridEmbedding {
  GridGraph grid;
  std::vector<std::optional<GridPoint>> vertex_point;   // by source vertex id
  std::map<EdgeId, std::vector<GridPoint>> edge_paths;  // by source edge id
  // Terminal position -> path from its boundary point to its vertex (a
  // single point when the vertex already is on the boundary).
  std::vector<std::vector<GridPoint>> terminal_paths;
  bool fast_path = false;
};

// st-numbering (1..n by vertex id, 0 for holes) of a biconnected undirected
// graph with s and t adjacent: s gets 1, t gets n, every other vertex has a
// lower and a higher numbered neighbour. Throws PreconditionError otherwise.
std::vector<int> StNumbering(const TerminalGraph& g, VertexId s, VertexId t);

// True when every vertex has distinct coordinates, every edge joins
// lattice neighbours, no two edges are parallel and every terminal lies on
// the bounding box.
bool HasGridCoordinates(const TerminalGraph& g);

// Node embedding into a square grid with every terminal on the boundary.
// Graphs with grid coordinates are placed by those coordinates (the last row
// and column stretched onto the boundary of the square); others need max
// degree 3 and terminal degree 2 and are drawn through a visibility layout.
// Each edge path carries the edge weight on every step (cut mode) or an
// equal share of it (distance mode); terminal paths carry `heavy`.
// Throws PreconditionError on violated preconditions.
GridEmbedding OrthogonalGridEmbed(const TerminalGraph& g, RewriteMode mode, const Rational& heavy);

// Full grid graph; padding edges get `pad`. Vertex ids are row-major.
TerminalGraph GridToGraph(const GridGraph& grid, WeightRole role, const Rational& pad);

// ---- half-grids ---------------------------------------------------------------

// Points (i, j) with 1 <= i <= j <= size, grid edges and the diagonal edges
// ((i,i), (i+1,i+1)). Terminals sit on the diagonal.
struct HalfGrid {
  int size = 0;
  std::map<PointPair, Rational> weights;  // absent edges are padding
  std::map<int, int> terminals;           // diagonal index -> terminal position

  int num_terminals() const { return static_cast<int>(terminals.size()); }
};

// Vertex ids of the half-grid points; (i, j) with i <= j, 1-based.
class HalfGridLayout {
 public:
  HalfGridLayout() = default;
  explicit HalfGridLayout(int size);
  int size() const { return size_; }
  VertexId at(int i, int j) const;
  void set(int i, int j, VertexId v);
  // Drops row i = m and column j = m and renumbers the rest.
  void RemoveIndex(int m);

 private:
  int size_ = 0;
  std::vector<VertexId> cells_;
};

// Full half-grid graph (padding edges get `pad`), diagonal edges optional.
// Terminals are listed by terminal position; vertex ids are row-major.
TerminalGraph HalfGridToGraph(const HalfGrid& hg, WeightRole role, const Rational& pad,
                              bool with_diagonal, HalfGridLayout* layout = nullptr);

// Image of grid point p of an n x n grid in the half-grid of size 4n - 3.
GridPoint GridPointToHalfGrid(int n, GridPoint p);
// Image path of the grid edge (a, b), from the image of a to the image of b.
std::vector<GridPoint> GridEdgeToHalfGridPath(int n, GridPoint a, GridPoint b);

// Node embedding of the grid into the half-grid of size 4n - 3. Path steps
// carry the edge weight (cut) or an equal share of it (distance). Throws
// PreconditionError when a terminal is off the boundary.
HalfGrid GridToHalfGrid(const GridGraph& grid, RewriteMode mode);

// ---- half-grid reduction ---------------------------------------------------------

// Makes diagonal indices 1, 2, size-1 and size terminals (positions after
// the existing ones). Returns the promoted diagonal indices, ascending.
std::vector<int> PromoteCorners(HalfGrid& hg);

// Removes the non-terminal diagonal vertex (m, m) together with its row and
// column from a half-grid without diagonal edges, leaving the half-grid of
// size one less. `layout` is updated.
std::vector<ReductionStep> EliminateDiagonalVertex(TerminalGraph& g, HalfGridLayout& layout, int m);

struct GitlerResult {
  TerminalGraph input;   // the promoted half-grid with diagonal edges
  TerminalGraph graph;   // half-grid without diagonal edges, all diagonal terminal
  HalfGridLayout layout;
  std::vector<ReductionStep> steps;  // replay from `input` to `graph`
  std::vector<int> promoted;         // terminal positions added by promotion
  int k_prime = 0;
};

// Promotes the corners, removes the diagonal edges by pushing each to the
// outer boundary, then eliminates every non-terminal diagonal vertex from the
// last to the first.
GitlerResult GitlerReduce(HalfGrid hg, RewriteMode mode, const Rational& pad);

// ---- end-to-end -------------------------------------------------------------

struct StageRecord {
  std::string stage;
  nlohmann::json stats_in;
  nlohmann::json stats_out;
  nlohmann::json detail = nlohmann::json::object();
  // Rule stages only: canonical input/output text and the steps between them.
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::vector<ReductionStep> steps;

  nlohmann::json ToJson() const;
  static StageRecord FromJson(const nlohmann::json& j);
};

struct OsSparsifier {
  TerminalGraph graph;
  SparsifierMode mode = SparsifierMode::kCut;
  Rational scale{1};
  bool fast_path = false;
  int k_prime = 0;
  std::vector<StageRecord> log;
};

// Exact cut, distance or flow sparsifier of a planar graph whose terminals
// share a face. Cut and flow need capacities, distance needs lengths; the
// distance mode also needs the terminals in one component.
OsSparsifier BuildSparsifierOs(const TerminalGraph& g, SparsifierMode mode);

std::string PipelineLogToJsonLines(const std::vector<StageRecord>& log);
std::vector<StageRecord> PipelineLogFromJsonLines(std::string_view text);

// Replays every rule stage from its recorded input; reports per-stage
// agreement with the recorded output.
struct LogReplayReport {
  bool ok = true;
  nlohmann::json stages = nlohmann::json::array();
};
LogReplayReport ReplayPipelineLog(const std::vector<StageRecord>& log);

// Largest output the pipeline may produce for k terminals: (k+4)(k+5)/2.
int OsSizeBound(int k);

}  // namespace vsparse

#endif  // VSPARSE_OS_PIPELINE_HPP_
