#pragma once

#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial.hpp"

namespace bei {

// Path i = i_0, i_1, ..., i_r = j with i < j such that
//   (i)   vertices are distinct and consecutive ones are adjacent,
//   (ii)  each interior vertex is < i or > j,
//   (iii) no proper subset of the interior vertices, taken in the order they
//         appear, again forms a path from i to j.
struct AdmissiblePath {
  std::vector<int> vertices;

  int from() const { return vertices.front(); }
  int to() const { return vertices.back(); }
  std::string str() const;
};

// All admissible paths between all pairs i < j, sorted by (i, j) and then
// lexicographically on the vertex sequence.
std::vector<AdmissiblePath> enumerate_admissible_paths(const Graph& g);

// u_pi = prod of x_k over interior k > j times prod of y_k over interior k < i.
Monomial path_monomial(const AdmissiblePath& path, int n);

}  // namespace bei
