#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bei/error.hpp"

namespace bei {

// Simple undirected graph on vertices 1..n. Edges stored normalized (u < v)
// and sorted; construction validates and is deterministic.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const;
  std::string describe() const;  // e.g. "graph(n=4, edges=4)"
};

Graph make_cycle(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// File format: first data line is n; each later non-empty line is "u v";
// lines whose first non-blank character is '#' are comments.
Graph parse_graph_file(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace bei
