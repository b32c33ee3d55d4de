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

#include "vsparse/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <algorithm>
#include <map>
#include <utility>

#include "vsparse/errors.hpp"

namespace vsparse {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Simple undirected image of g on compact vertex indices. `rep[i]` is the
// TerminalGraph edge standing for Boost edge i; `extra[i]` lists the parallel
// edges it absorbed.
struct SimpleImage {
  BoostGraph graph;
  std::vector<int> index_of;  // by vertex id
  std::vector<EdgeId> rep;
  std::vector<std::vector<EdgeId>> extra;
};

SimpleImage BuildImage(const TerminalGraph& g) {
  SimpleImage img;
  img.index_of.assign(g.vertex_bound(), -1);
  int n = 0;
  for (VertexId v : g.Vertices()) img.index_of[v] = n++;
  img.graph = BoostGraph(n);
  std::map<std::pair<int, int>, int> seen;
  for (EdgeId e : g.Edges()) {
    int a = img.index_of[g.edge(e).tail];
    int b = img.index_of[g.edge(e).head];
    if (a > b) std::swap(a, b);
    const auto [it, fresh] = seen.emplace(std::pair{a, b}, static_cast<int>(img.rep.size()));
    if (!fresh) {
      img.extra[it->second].push_back(e);
      continue;
    }
    boost::add_edge(a, b, it->second, img.graph);
    img.rep.push_back(e);
    img.extra.emplace_back();
  }
  return img;
}

using Embedding = std::vector<std::vector<BoostEdge>>;

bool Embed(const BoostGraph& graph, Embedding& order) {
  order.assign(boost::num_vertices(graph), {});
  auto embedding = boost::make_iterator_property_map(
      order.begin(), boost::get(boost::vertex_index, graph));
  return boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = graph,
      boost::boyer_myrvold_params::embedding = embedding);
}

// Adds each requested edge with the next free edge index and records it.
struct RecordingVisitor {
  std::vector<std::pair<int, int>>* added;
  int* next_index;

  template <typename Graph, typename Vertex>
  void visit_vertex_pair(Vertex u, Vertex v, Graph& g) {
    boost::add_edge(u, v, (*next_index)++, g);
    added->emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
};

}  // namespace

bool IsPlanar(const TerminalGraph& g) {
  SimpleImage img = BuildImage(g);
  return boost::boyer_myrvold_planarity_test(img.graph);
}

std::optional<Rotation> PlanarEmbedding(const TerminalGraph& g) {
  SimpleImage img = BuildImage(g);
  const auto n = boost::num_vertices(img.graph);
  std::vector<std::vector<BoostEdge>> order(n);
  auto embedding = boost::make_iterator_property_map(
      order.begin(), boost::get(boost::vertex_index, img.graph));
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = img.graph,
          boost::boyer_myrvold_params::embedding = embedding)) {
    return std::nullopt;
  }
  const auto index = boost::get(boost::edge_index, img.graph);
  Rotation rot(g.vertex_bound());
  for (VertexId v : g.Vertices()) {
    for (const BoostEdge& be : order[img.index_of[v]]) {
      const int i = index[be];
      const auto& extra = img.extra[i];
      // Parallel edges nest as lenses: mirrored order at the far endpoint.
      const auto a = static_cast<int>(boost::source(be, img.graph));
      const auto b = static_cast<int>(boost::target(be, img.graph));
      const bool near = std::min(a, b) == img.index_of[v];
      if (near) {
        rot[v].push_back(img.rep[i]);
        rot[v].insert(rot[v].end(), extra.begin(), extra.end());
      } else {
        rot[v].insert(rot[v].end(), extra.rbegin(), extra.rend());
        rot[v].push_back(img.rep[i]);
      }
    }
  }
  return rot;
}

std::vector<std::pair<VertexId, VertexId>> BiconnectingEdges(const TerminalGraph& g) {
  SimpleImage img = BuildImage(g);
  std::vector<VertexId> vertex_at(boost::num_vertices(img.graph));
  for (VertexId v : g.Vertices()) vertex_at[img.index_of[v]] = v;
  std::vector<std::pair<int, int>> added;
  int next_index = static_cast<int>(boost::num_edges(img.graph));
  RecordingVisitor visitor{&added, &next_index};
  boost::make_connected(img.graph, boost::get(boost::vertex_index, img.graph), visitor);
  Embedding order;
  if (!Embed(img.graph, order)) throw PreconditionError("graph is not planar");
  auto embedding = boost::make_iterator_property_map(
      order.begin(), boost::get(boost::vertex_index, img.graph));
  boost::make_biconnected_planar(img.graph, embedding,
                                 boost::get(boost::edge_index, img.graph), visitor);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [a, b] : added) out.emplace_back(vertex_at[a], vertex_at[b]);
  return out;
}

}  // namespace vsparse
