#include "bei/koszul.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace bei {

KoszulInput koszul_input_from_graph(const Graph& g) {
  KoszulInput in;
  in.n = g.n;
  const GroebnerBasis basis = groebner_basis(g);
  in.basis = basis.elements;
  std::vector<Monomial> leads;
  for (const auto& b : in.basis) leads.push_back(b.lead);
  in.leads = minimal_generators(2 * g.n, std::move(leads));
  return in;
}

KoszulInput koszul_input_from_monomial_ideal(const MonomialIdeal& I) {
  if (I.nvars % 2 != 0) throw Error("koszul oracle expects a ring with 2n variables");
  KoszulInput in;
  in.n = I.nvars / 2;
  in.leads = I;
  in.monomial_mode = true;
  return in;
}

namespace {

void enumerate_rec(int pos, int remaining, std::vector<int>& exps, const MonomialIdeal& leads,
                   std::vector<Monomial>& out) {
  const int nvars = static_cast<int>(exps.size());
  if (pos == nvars - 1) {
    exps[pos] = remaining;
    Monomial m(exps);
    if (!leads.contains(m)) out.push_back(std::move(m));
    exps[pos] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    enumerate_rec(pos + 1, remaining - e, exps, leads, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& leads, int degree) {
  if (degree < 0) return {};
  if (leads.nvars == 0) throw Error("standard_monomials needs an ambient ring");
  std::vector<Monomial> out;
  std::vector<int> exps(leads.nvars, 0);
  enumerate_rec(0, degree, exps, leads, out);
  return out;
}

long long koszul_spot_dimension(const KoszulInput& in, int i, int j) {
  if (i < 0 || j < i) return 0;
  const int N = 2 * in.n;
  if (i > N) return 0;
  return binomial_coefficient(N, i) * static_cast<long long>(standard_monomials(in.leads, j - i).size());
}

namespace {

using Subset = std::vector<int>;

struct SpotBasis {
  // per multidegree block: list of (subset index into subsets, monomial index into stds)
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> blocks;
  std::vector<Subset> subsets;
  std::vector<Monomial> stds;
};

std::vector<Subset> all_subsets(int N, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > N) return out;
  Subset cur(k);
  for (int t = 0; t < k; ++t) cur[t] = t;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == N - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int t = pos + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

std::vector<int> vertex_multidegree(const Monomial& m, int n) {
  std::vector<int> md(n, 0);
  for (int pos = 0; pos < 2 * n; ++pos) md[pos < n ? pos : pos - n] += m.exponent(pos);
  return md;
}

SpotBasis spot_basis(const KoszulInput& in, int i, int j) {
  SpotBasis b;
  if (i < 0 || j < i) return b;
  const int N = 2 * in.n;
  if (i > N) return b;
  b.subsets = all_subsets(N, i);
  b.stds = standard_monomials(in.leads, j - i);
  std::vector<std::vector<int>> sub_md(b.subsets.size());
  for (size_t s = 0; s < b.subsets.size(); ++s) {
    std::vector<int> md(in.n, 0);
    for (int t : b.subsets[s]) ++md[t < in.n ? t : t - in.n];
    sub_md[s] = std::move(md);
  }
  for (size_t w = 0; w < b.stds.size(); ++w) {
    const std::vector<int> wmd = vertex_multidegree(b.stds[w], in.n);
    for (size_t s = 0; s < b.subsets.size(); ++s) {
      std::vector<int> key = sub_md[s];
      for (int v = 0; v < in.n; ++v) key[v] += wmd[v];
      b.blocks[key].push_back({static_cast<int>(s), static_cast<int>(w)});
    }
  }
  return b;
}

// normal form of x_t * w; false when it dies (monomial mode only)
bool step_normal_form(const KoszulInput& in, int t, const Monomial& w, Monomial& out) {
  const Monomial m = multiply(Monomial::variable(t, 2 * in.n), w);
  if (in.monomial_mode) {
    if (in.leads.contains(m)) return false;
    out = m;
    return true;
  }
  out = normal_form_monomial(m, std::span<const Binomial>(in.basis));
  return true;
}

// rank of the boundary map whose columns come from src (an (i, j) spot basis)
// and whose rows live in tgt (the (i-1, j) spot basis)
long long boundary_rank(const KoszulInput& in, const SpotBasis& src, const SpotBasis& tgt,
                        const OracleConfig& cfg) {
  // index target pairs inside each block
  struct Block {
    const std::vector<std::pair<int, int>>* src_items;
    std::map<std::pair<int, int>, int> tgt_index;
  };
  std::vector<Block> blocks;
  for (const auto& [key, items] : src.blocks) {
    Block blk;
    blk.src_items = &items;
    auto it = tgt.blocks.find(key);
    if (it != tgt.blocks.end()) {
      int r = 0;
      for (const auto& pr : it->second) blk.tgt_index[pr] = r++;
    }
    blocks.push_back(std::move(blk));
  }

  // map a target (subset, monomial) pair to its local index; the subset is
  // looked up by value, the monomial likewise
  std::map<Subset, int> tgt_subset_index;
  for (size_t s = 0; s < tgt.subsets.size(); ++s) tgt_subset_index[tgt.subsets[s]] = static_cast<int>(s);
  std::map<std::vector<int>, int> tgt_std_index;
  for (size_t w = 0; w < tgt.stds.size(); ++w) tgt_std_index[tgt.stds[w].exponents()] = static_cast<int>(w);

  std::vector<long long> ranks(blocks.size(), 0);
  const int threads = std::max(1, cfg.threads);
  auto work = [&](int tid) {
    for (size_t k = tid; k < blocks.size(); k += threads) {
      Block& blk = blocks[k];
      MatrixModP m;
      m.rows = static_cast<int>(blk.tgt_index.size());
      m.cols = static_cast<int>(blk.src_items->size());
      m.columns.resize(m.cols);
      for (int c = 0; c < m.cols; ++c) {
        const auto [sidx, widx] = (*blk.src_items)[c];
        const Subset& T = src.subsets[sidx];
        const Monomial& w = src.stds[widx];
        std::map<int, int> rowvals;
        for (size_t pos = 0; pos < T.size(); ++pos) {
          Monomial nf;
          if (!step_normal_form(in, T[pos], w, nf)) continue;
          Subset T2 = T;
          T2.erase(T2.begin() + pos);
          auto its = tgt_subset_index.find(T2);
          auto itw = tgt_std_index.find(nf.exponents());
          if (its == tgt_subset_index.end() || itw == tgt_std_index.end())
            throw Error("koszul boundary left the standard basis");
          const auto itr = blk.tgt_index.find({its->second, itw->second});
          if (itr == blk.tgt_index.end()) throw Error("koszul boundary left its multidegree block");
          rowvals[itr->second] += (pos % 2 == 0) ? 1 : -1;
        }
        for (const auto& [r, v] : rowvals)
          if (v != 0) m.columns[c].push_back({r, v});
      }
      ranks[k] = cfg.exact_rationals ? rank_exact_rationals(m) : rank_mod_p(m, cfg.field);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  long long total = 0;
  for (long long r : ranks) total += r;
  return total;
}

void check_spot_cap(const KoszulInput& in, int i, int j, const OracleConfig& cfg) {
  for (int ii : {i, i + 1}) {
    const long long dim = koszul_spot_dimension(in, ii, j);
    if (dim > cfg.spot_cap)
      throw CapError("koszul spot (" + std::to_string(ii) + "," + std::to_string(j) + ") dimension " +
                     std::to_string(dim) + " exceeds cap " + std::to_string(cfg.spot_cap));
  }
}

}  // namespace

long long koszul_spot(const KoszulInput& in, int i, int j, const OracleConfig& cfg) {
  if (i < 0 || j < i) return 0;
  check_spot_cap(in, i, j, cfg);
  const SpotBasis here = spot_basis(in, i, j);
  long long dim = 0;
  for (const auto& [key, items] : here.blocks) dim += static_cast<long long>(items.size());
  if (dim == 0) return 0;
  const SpotBasis below = spot_basis(in, i - 1, j);
  const SpotBasis above = spot_basis(in, i + 1, j);
  const long long r_down = (i >= 1) ? boundary_rank(in, here, below, cfg) : 0;
  const long long r_up = boundary_rank(in, above, here, cfg);
  const long long beta = dim - r_down - r_up;
  if (beta < 0) throw Error("negative betti number: koszul internal error");
  return beta;
}

BettiTable koszul_betti(const KoszulInput& in, int i_max, int j_max, const OracleConfig& cfg) {
  if (i_max < 0 || j_max < 0) throw Error("koszul_betti needs nonnegative bounds");
  BettiTable t;
  t.subject = "S/J";
  t.bounded = true;
  t.i_max = i_max;
  t.j_max = j_max;
  for (int i = 0; i <= i_max; ++i)
    for (int j = i; j <= j_max; ++j) t.add(i, j, koszul_spot(in, i, j, cfg));
  return t;
}

MatrixModP koszul_boundary(const KoszulInput& in, int i, int j) {
  const int N = 2 * in.n;
  const std::vector<Subset> src_subsets = all_subsets(N, i);
  const std::vector<Monomial> src_stds = standard_monomials(in.leads, j - i);
  const std::vector<Subset> tgt_subsets = all_subsets(N, i - 1);
  const std::vector<Monomial> tgt_stds = standard_monomials(in.leads, j - i + 1);

  std::map<Subset, int> tsi;
  for (size_t s = 0; s < tgt_subsets.size(); ++s) tsi[tgt_subsets[s]] = static_cast<int>(s);
  std::map<std::vector<int>, int> twi;
  for (size_t w = 0; w < tgt_stds.size(); ++w) twi[tgt_stds[w].exponents()] = static_cast<int>(w);

  MatrixModP m;
  m.rows = static_cast<int>(tgt_subsets.size() * tgt_stds.size());
  m.cols = static_cast<int>(src_subsets.size() * src_stds.size());
  m.columns.resize(m.cols);
  int c = 0;
  for (const auto& T : src_subsets) {
    for (const auto& w : src_stds) {
      std::map<int, int> rowvals;
      for (size_t pos = 0; pos < T.size(); ++pos) {
        Monomial nf;
        if (!step_normal_form(in, T[pos], w, nf)) continue;
        Subset T2 = T;
        T2.erase(T2.begin() + pos);
        const int row = tsi.at(T2) * static_cast<int>(tgt_stds.size()) + twi.at(nf.exponents());
        rowvals[row] += (pos % 2 == 0) ? 1 : -1;
      }
      for (const auto& [r, v] : rowvals)
        if (v != 0) m.columns[c].push_back({r, v});
      ++c;
    }
  }
  return m;
}

}  // namespace bei
