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

#include "vsparse/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include "vsparse/errors.hpp"

namespace vsparse {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ToInt(std::string_view s, long long& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

TerminalGraph ParseGraph(std::string_view text) {
  enum class Expect { kHeader, kVertices, kTerminals, kBody };
  Expect expect = Expect::kHeader;
  TerminalGraph g;
  bool directed = true;
  WeightRole role = WeightRole::kNone;
  long long n = 0;
  int line_no = 0;

  auto vertex = [&](std::string_view tok, const char* what) {
    long long v = 0;
    if (!ToInt(tok, v)) {
      throw ParseError(line_no, std::string("malformed ") + what + " id '" +
                                    std::string(tok) + "'");
    }
    return v;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = Tokens(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    switch (expect) {
      case Expect::kHeader: {
        if (tok.size() != 3 || tok[0] != "graph" ||
            (tok[1] != "directed" && tok[1] != "undirected")) {
          throw ParseError(line_no, "malformed header");
        }
        directed = tok[1] == "directed";
        if (tok[2] == "cut") {
          role = WeightRole::kCapacity;
        } else if (tok[2] == "length") {
          role = WeightRole::kLength;
        } else if (tok[2] == "none") {
          role = WeightRole::kNone;
        } else {
          throw ParseError(line_no, "malformed header: unknown mode '" +
                                        std::string(tok[2]) + "'");
        }
        expect = Expect::kVertices;
        break;
      }
      case Expect::kVertices: {
        if (tok.size() != 2 || tok[0] != "vertices" || !ToInt(tok[1], n) ||
            n < 1) {
          throw ParseError(line_no, "malformed vertices line");
        }
        g = TerminalGraph::WithVertices(directed, role, static_cast<int>(n));
        expect = Expect::kTerminals;
        break;
      }
      case Expect::kTerminals: {
        if (tok[0] != "terminals" || tok.size() < 2) {
          throw ParseError(line_no, "malformed terminals line");
        }
        std::vector<VertexId> terms;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          const long long v = vertex(tok[i], "terminal");
          if (v < 0 || v >= n) {
            throw ParseError(line_no, "terminal id not a vertex: " +
                                          std::string(tok[i]));
          }
          terms.push_back(static_cast<VertexId>(v));
        }
        try {
          g.SetTerminals(std::move(terms));
        } catch (const PreconditionError& e) {
          throw ParseError(line_no, e.what());
        }
        expect = Expect::kBody;
        break;
      }
      case Expect::kBody: {
        if (tok[0] == "c") {
          if (tok.size() != 4) throw ParseError(line_no, "malformed coordinate line");
          const long long v = vertex(tok[1], "vertex");
          long long r = 0;
          long long c = 0;
          if (!ToInt(tok[2], r) || !ToInt(tok[3], c)) {
            throw ParseError(line_no, "malformed coordinate line");
          }
          if (v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
          g.SetCoord(static_cast<VertexId>(v),
                     GridPoint{static_cast<int>(r), static_cast<int>(c)});
        } else if (tok[0] == "e") {
          if (tok.size() != 4 && !(tok.size() == 3 && role == WeightRole::kNone)) {
            throw ParseError(line_no, "malformed edge line");
          }
          const long long u = vertex(tok[1], "vertex");
          const long long v = vertex(tok[2], "vertex");
          if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(line_no, "edge endpoint not a vertex");
          }
          if (u == v) throw ParseError(line_no, "self-loop");
          Rational w(1);
          if (tok.size() == 4) {
            auto parsed = Rational::Parse(tok[3]);
            if (!parsed) throw ParseError(line_no, "malformed weight");
            if (parsed->is_negative()) throw ParseError(line_no, "negative weight");
            w = *parsed;
          }
          g.AddEdge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                    std::move(w));
        } else {
          throw ParseError(line_no, "unknown line type '" +
                                        std::string(tok[0]) + "'");
        }
        break;
      }
    }
    if (nl == text.size()) break;
  }
  if (expect != Expect::kBody) {
    throw ParseError(line_no, "unexpected end of input");
  }
  return g;
}

std::string SerializeGraph(const TerminalGraph& g) {
  const auto [c, map] = Compacted(g);
  std::ostringstream os;
  os << "graph " << (c.directed() ? "directed" : "undirected") << ' '
     << WeightRoleName(c.role()) << '\n';
  os << "vertices " << c.num_vertices() << '\n';
  os << "terminals";
  for (VertexId t : c.terminals()) os << ' ' << t;
  os << '\n';
  for (VertexId v : c.Vertices()) {
    if (auto p = c.coord(v)) os << "c " << v << ' ' << p->row << ' ' << p->col << '\n';
  }
  std::vector<std::tuple<VertexId, VertexId, Rational>> edges;
  edges.reserve(c.num_edges());
  for (EdgeId e : c.Edges()) {
    const Edge& ed = c.edge(e);
    VertexId a = ed.tail;
    VertexId b = ed.head;
    if (!c.directed() && b < a) std::swap(a, b);
    edges.emplace_back(a, b, ed.weight);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b, w] : edges) {
    os << "e " << a << ' ' << b << ' ' << w << '\n';
  }
  return os.str();
}

nlohmann::json GraphStats(const TerminalGraph& g) {
  return {{"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"k", g.num_terminals()},
          {"nonterminals", g.num_vertices() - g.num_terminals()},
          {"mode", std::string(WeightRoleName(g.role()))},
          {"directed", g.directed()}};
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

TerminalGraph ReadGraphFile(const std::string& path) {
  return ParseGraph(ReadTextFile(path));
}

TerminalGraph CanonicalGraph(const TerminalGraph& g) { return ParseGraph(SerializeGraph(g)); }

}  // namespace vsparse
