#include "bei/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bei/monomial.hpp"

namespace bei {

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::string Graph::describe() const {
  return "graph(n=" + std::to_string(n) + ", edges=" + std::to_string(edges.size()) + ")";
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 1) throw Error("vertex count must be positive, got " + std::to_string(n));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_list) {
    if (u == v) throw Error("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 1.." + std::to_string(n));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  Graph g;
  g.n = n;
  g.edges.assign(seen.begin(), seen.end());
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw Error("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return make_graph(n, e);
}

Graph make_complete_bipartite(int m, int n) {
  if (n < 1 || m < n)
    throw Error("complete bipartite needs m >= n >= 1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) e.push_back({i, m + j});
  return make_graph(m + n, e);
}

Graph parse_graph_file(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1) throw Error("line " + std::to_string(lineno) + ": expected vertex count");
      std::string rest;
      if (ls >> rest) throw Error("line " + std::to_string(lineno) + ": trailing tokens after vertex count");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) throw Error("line " + std::to_string(lineno) + ": expected edge 'u v'");
    std::string rest;
    if (ls >> rest) throw Error("line " + std::to_string(lineno) + ": trailing tokens after edge");
    edges.push_back({u, v});
  }
  if (n < 0) throw Error("graph file has no vertex count line");
  return make_graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse_graph_file(in);
}

}  // namespace bei
