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

#ifndef VSPARSE_GRAPH_IO_HPP_
#define VSPARSE_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "vsparse/terminal_graph.hpp"

namespace vsparse {

// Text format:
//   graph <directed|undirected> <cut|length|none>
//   vertices <n>
//   terminals <id> ...
//   c <id> <row> <col>          (optional, grid coordinates)
//   e <tail> <head> <weight>     (weight: integer or num/den)
// Blank lines and '#' comments are ignored. Vertex ids are 0..n-1.
// Throws ParseError carrying the offending line number.
TerminalGraph ParseGraph(std::string_view text);

// Canonical text: ids compacted in order, coordinate lines by id, edge lines
// sorted by (tail, head, weight); undirected edges print the smaller id first.
std::string SerializeGraph(const TerminalGraph& g);

// The graph as parsed back from its canonical text; ids match that text.
TerminalGraph CanonicalGraph(const TerminalGraph& g);

// {n, m, k, nonterminals, mode, directed}
nlohmann::json GraphStats(const TerminalGraph& g);

TerminalGraph ReadGraphFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);
std::string ReadTextFile(const std::string& path);

}  // namespace vsparse

#endif  // VSPARSE_GRAPH_IO_HPP_
