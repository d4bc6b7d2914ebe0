#include "bei/paths.hpp"

#include <algorithm>

namespace bei {

std::string AdmissiblePath::str() const {
  std::string out = "(";
  for (size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(vertices[k]);
  }
  return out + ")";
}

namespace {

// Does some proper subset of the interior vertices, in induced order, connect
// i to j? Subsets are tested exhaustively; paths are short at this scale.
bool has_proper_interior_subpath(const Graph& g, const std::vector<int>& verts) {
  const int r = static_cast<int>(verts.size());
  const int interior = r - 2;
  if (interior <= 0) return false;
  for (int mask = 0; mask < (1 << interior) - 1; ++mask) {
    std::vector<int> seq;
    seq.push_back(verts.front());
    for (int k = 0; k < interior; ++k)
      if (mask & (1 << k)) seq.push_back(verts[k + 1]);
    seq.push_back(verts.back());
    bool path = true;
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
      if (!g.adjacent(seq[k], seq[k + 1])) {
        path = false;
        break;
      }
    }
    if (path) return true;
  }
  return false;
}

void extend(const Graph& g, int i, int j, std::vector<int>& cur, std::vector<char>& used,
            std::vector<AdmissiblePath>& out) {
  const int last = cur.back();
  if (last == j) {
    if (!has_proper_interior_subpath(g, cur)) out.push_back(AdmissiblePath{cur});
    return;
  }
  for (int v = 1; v <= g.n; ++v) {
    if (used[v] || !g.adjacent(last, v)) continue;
    if (v != j && v > i && v < j) continue;  // condition (ii)
    if (v == i) continue;
    used[v] = 1;
    cur.push_back(v);
    extend(g, i, j, cur, used, out);
    cur.pop_back();
    used[v] = 0;
  }
}

}  // namespace

std::vector<AdmissiblePath> enumerate_admissible_paths(const Graph& g) {
  std::vector<AdmissiblePath> out;
  for (int i = 1; i <= g.n; ++i) {
    for (int j = i + 1; j <= g.n; ++j) {
      std::vector<AdmissiblePath> pij;
      std::vector<int> cur{i};
      std::vector<char> used(g.n + 1, 0);
      used[i] = 1;
      extend(g, i, j, cur, used, pij);
      std::sort(pij.begin(), pij.end(),
                [](const AdmissiblePath& a, const AdmissiblePath& b) { return a.vertices < b.vertices; });
      out.insert(out.end(), pij.begin(), pij.end());
    }
  }
  return out;
}

Monomial path_monomial(const AdmissiblePath& path, int n) {
  const int i = path.from(), j = path.to();
  Monomial u = Monomial::one(2 * n);
  for (size_t k = 1; k + 1 < path.vertices.size(); ++k) {
    const int v = path.vertices[k];
    if (v > j) u = multiply(u, Monomial::x(v, n));
    else if (v < i) u = multiply(u, Monomial::y(v, n));
    else throw Error("path " + path.str() + " has interior vertex violating admissibility");
  }
  return u;
}

}  // namespace bei
