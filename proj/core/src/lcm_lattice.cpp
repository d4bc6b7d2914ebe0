#include "bei/lcm_lattice.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace bei {

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I) {
  std::set<std::vector<int>> seen;
  std::vector<Monomial> out;
  std::vector<Monomial> frontier;
  for (const auto& g : I.gens) {
    if (seen.insert(g.exponents()).second) {
      out.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& z : frontier) {
      for (const auto& g : I.gens) {
        Monomial j = lcm(z, g);
        if (seen.insert(j.exponents()).second) {
          out.push_back(j);
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
  });
  return out;
}

namespace {

long long matrix_rank(MatrixModP& m, const OracleConfig& cfg) {
  if (cfg.exact_rationals) return rank_exact_rationals(m);
  return rank_mod_p(m, cfg.field);
}

// Reduced homology of the complex whose faces are the given bitmasks (closed
// under subsets, containing the empty mask). Keys are simplicial dimensions.
std::map<int, long long> homology_of_mask_complex(const std::vector<unsigned>& faces, const OracleConfig& cfg) {
  // bucket faces by dimension = popcount - 1
  int maxdim = -1;
  for (unsigned f : faces) maxdim = std::max(maxdim, __builtin_popcount(f) - 1);
  std::vector<std::vector<unsigned>> bydim(maxdim + 2);
  for (unsigned f : faces) bydim[__builtin_popcount(f)].push_back(f);  // slot d+1 holds dim d
  for (auto& v : bydim) std::sort(v.begin(), v.end());

  std::vector<std::map<unsigned, int>> index(maxdim + 2);
  for (int s = 0; s <= maxdim + 1; ++s)
    for (size_t k = 0; k < bydim[s].size(); ++k) index[s][bydim[s][k]] = static_cast<int>(k);

  // ranks[d] = rank of the boundary map from dimension d to d-1
  std::map<int, long long> ranks;
  for (int d = 0; d <= maxdim; ++d) {
    MatrixModP m;
    m.rows = static_cast<int>(bydim[d].size());
    m.cols = static_cast<int>(bydim[d + 1].size());
    m.columns.resize(m.cols);
    for (int c = 0; c < m.cols; ++c) {
      const unsigned F = bydim[d + 1][c];
      int sign = 1;
      std::vector<std::pair<int, int>> col;
      for (unsigned bits = F; bits;) {
        const unsigned bit = bits & (~bits + 1);
        col.push_back({index[d].at(F ^ bit), sign});
        sign = -sign;
        bits ^= bit;
      }
      std::sort(col.begin(), col.end());
      m.columns[c] = std::move(col);
    }
    ranks[d] = matrix_rank(m, cfg);
  }

  std::map<int, long long> h;
  for (int d = -1; d <= maxdim; ++d) {
    const long long dim_d = static_cast<long long>(bydim[d + 1].size());
    const long long r_down = d >= 0 ? ranks[d] : 0;
    const long long r_up = (d + 1 <= maxdim) ? ranks[d + 1] : 0;
    const long long v = dim_d - r_down - r_up;
    if (v != 0) h[d] = v;
  }
  return h;
}

std::map<int, long long> interval_homology_crosscut(const MonomialIdeal& I, const Monomial& b,
                                                    const OracleConfig& cfg) {
  // positions where b is positive, renumbered 0..s-1
  std::vector<int> positions;
  for (int v = 0; v < b.nvars(); ++v)
    if (b.exponent(v) > 0) positions.push_back(v);
  const int s = static_cast<int>(positions.size());
  if (s > 26) throw CapError("crosscut support " + std::to_string(s) + " too large");

  // the nerve of the cover of the atom crosscut complex by the simplices
  // {atoms staying below b at position v} is generated by one facet per atom
  std::vector<unsigned> facets;
  for (const auto& g : I.gens) {
    if (!divides(g, b)) continue;
    unsigned mask = 0;
    for (int k = 0; k < s; ++k)
      if (g.exponent(positions[k]) < b.exponent(positions[k])) mask |= (1u << k);
    facets.push_back(mask);
  }

  std::vector<char> present(1u << s, 0);
  for (unsigned f : facets) {
    unsigned sub = f;
    while (true) {
      present[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<unsigned> faces;
  for (unsigned mask = 0; mask < (1u << s); ++mask)
    if (present[mask]) faces.push_back(mask);
  return homology_of_mask_complex(faces, cfg);
}

std::map<int, long long> interval_homology_chains(const std::vector<Monomial>& interval, const OracleConfig& cfg) {
  const int ne = static_cast<int>(interval.size());
  // chains[l] lists strictly divisibility-increasing index sequences of length l
  std::vector<std::vector<std::vector<int>>> chains(1);
  chains[0].push_back({});  // the empty chain, dimension -1
  long long total = 1;
  std::vector<std::vector<int>> above(ne);
  for (int a = 0; a < ne; ++a)
    for (int b = a + 1; b < ne; ++b)
      if (divides(interval[a], interval[b])) above[a].push_back(b);
  for (int len = 1;; ++len) {
    std::vector<std::vector<int>> cur;
    if (len == 1) {
      for (int a = 0; a < ne; ++a) cur.push_back({a});
    } else {
      for (const auto& c : chains[len - 1]) {
        for (int nxt : above[c.back()]) {
          auto ext = c;
          ext.push_back(nxt);
          cur.push_back(std::move(ext));
        }
      }
    }
    if (cur.empty()) break;
    total += static_cast<long long>(cur.size());
    if (total > cfg.chain_cap)
      throw CapError("interval chain count exceeds cap " + std::to_string(cfg.chain_cap));
    chains.push_back(std::move(cur));
  }

  const int maxlen = static_cast<int>(chains.size()) - 1;
  std::vector<std::map<std::vector<int>, int>> index(maxlen + 1);
  for (int l = 0; l <= maxlen; ++l)
    for (size_t k = 0; k < chains[l].size(); ++k) index[l][chains[l][k]] = static_cast<int>(k);

  std::map<int, long long> ranks;  // keyed by chain length of the source
  for (int l = 1; l <= maxlen; ++l) {
    MatrixModP m;
    m.rows = static_cast<int>(chains[l - 1].size());
    m.cols = static_cast<int>(chains[l].size());
    m.columns.resize(m.cols);
    for (int c = 0; c < m.cols; ++c) {
      const auto& chain = chains[l][c];
      std::vector<std::pair<int, int>> col;
      for (int pos = 0; pos < l; ++pos) {
        std::vector<int> face = chain;
        face.erase(face.begin() + pos);
        col.push_back({index[l - 1].at(face), pos % 2 == 0 ? 1 : -1});
      }
      std::sort(col.begin(), col.end());
      m.columns[c] = std::move(col);
    }
    ranks[l] = matrix_rank(m, cfg);
  }

  std::map<int, long long> h;
  for (int l = 0; l <= maxlen; ++l) {
    const long long dim_l = static_cast<long long>(chains[l].size());
    const long long r_down = l >= 1 ? ranks[l] : 0;
    const long long r_up = (l + 1 <= maxlen) ? ranks[l + 1] : 0;
    const long long v = dim_l - r_down - r_up;
    if (v != 0) h[l - 1] = v;  // chain length l spans simplicial dimension l-1
  }
  return h;
}

}  // namespace

std::map<int, long long> interval_homology(const MonomialIdeal& I, const std::vector<Monomial>& lattice,
                                           const Monomial& b, const OracleConfig& cfg) {
  std::vector<Monomial> interval;
  for (const auto& z : lattice)
    if (z != b && divides(z, b)) interval.push_back(z);
  if (interval.empty()) return {{-1, 1}};
  if (cfg.lcm_method == OracleConfig::LcmMethod::chains) return interval_homology_chains(interval, cfg);
  return interval_homology_crosscut(I, b, cfg);
}

BettiTable lcm_lattice_betti(const MonomialIdeal& I, const OracleConfig& cfg, bool squarefree_required) {
  if (I.is_zero()) throw Error("lcm_lattice_betti needs a nonzero ideal");
  if (squarefree_required) {
    for (const auto& g : I.gens)
      if (!g.is_squarefree()) throw Error("lcm_lattice_betti: generator " + g.str() + " is not squarefree");
  }
  const std::vector<Monomial> lattice = lcm_lattice(I);
  if (static_cast<long long>(lattice.size()) > cfg.lattice_cap)
    throw CapError("lcm lattice size " + std::to_string(lattice.size()) + " exceeds cap " +
                std::to_string(cfg.lattice_cap));

  const int nb = static_cast<int>(lattice.size());
  std::vector<std::vector<std::pair<std::pair<int, int>, long long>>> contrib(nb);
  const int threads = std::max(1, cfg.threads);
  auto work = [&](int t) {
    for (int k = t; k < nb; k += threads) {
      const Monomial& b = lattice[k];
      for (const auto& [d, h] : interval_homology(I, lattice, b, cfg))
        contrib[k].push_back({{d + 2, b.degree()}, h});
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  BettiTable table;
  table.subject = "S/I";
  table.add(0, 0, 1);
  for (int k = 0; k < nb; ++k)
    for (const auto& [pos, v] : contrib[k]) table.add(pos.first, pos.second, v);
  return table;
}

}  // namespace bei
