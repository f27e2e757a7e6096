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

#include "gossip/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace gossip {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : n(vertices), edges(std::move(edge_list)) {
  if (n < 1) {
    throw DimensionError("graph needs at least one vertex, got " +
                         std::to_string(n));
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) {
      throw DimensionError("edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} invalid for " +
                           std::to_string(n) + " vertices");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw DimensionError("edge {" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + "} repeated");
  }
}

BoolMatrix Graph::adjacency() const {
  BoolMatrix m(n);
  for (const auto& [u, v] : edges) {
    m.set(u - 1, v - 1, true);
    m.set(v - 1, u - 1, true);
  }
  return m;
}

BoolMatrix Graph::closed_adjacency() const {
  BoolMatrix m = adjacency();
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("graph text is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  long n = 0, m = 0;
  std::string rest;
  if (!(header >> n >> m) || (header >> rest)) {
    throw ParseError("graph header must be 'n m', got '" + line + "'");
  }
  if (n < 1 || n > 1 << 20 || m < 0) {
    throw ParseError("graph header out of range: '" + line + "'");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    if (!std::getline(in, line)) {
      throw ParseError("graph edge " + std::to_string(e + 1) +
                       " missing (expected " + std::to_string(m) + " edges)");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    long u = 0, v = 0;
    if (!(fields >> u >> v) || (fields >> rest)) {
      throw ParseError("graph edge line must be 'u v', got '" + line + "'");
    }
    if (u < 1 || v <= u || v > n) {
      throw ParseError("graph edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "} must satisfy 1 <= u < v <= " +
                       std::to_string(n));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("unexpected content after edge list: '" + line + "'");
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out =
      std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (const auto& [u, v] : g.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open graph file '" + path + "'");
  }
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open graph file '" + path + "' for writing");
  }
  out << format_graph(g);
  if (!out) {
    throw ParseError("failed writing graph file '" + path + "'");
  }
}

}  // namespace gossip
