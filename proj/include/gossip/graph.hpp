// Copyright 2026 The gossip-tools Authors
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

#ifndef GOSSIP_GRAPH_HPP_
#define GOSSIP_GRAPH_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gossip/bool_matrix.hpp"

namespace gossip {

// A simple undirected graph on vertices 1..n.  Edges are normalized to
// u < v, sorted, and free of duplicates.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

  // Adjacency matrix without the diagonal.
  BoolMatrix adjacency() const;
  // Adjacency matrix with ones on the diagonal (closed neighbourhoods).
  BoolMatrix closed_adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// -- Graph text format -------------------------------------------------------
//
// Line 1 holds "n m"; each of the m following lines holds one edge "u v"
// with 1 <= u < v <= n.  Duplicate edges are rejected.

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace gossip

#endif  // GOSSIP_GRAPH_HPP_
