#include "bei/betti.hpp"

#include <algorithm>

namespace bei {

void BettiTable::add(int i, int j, long long v) {
  if (v == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

long long BettiTable::at(int i, int j) const {
  if (bounded && (i > i_max || j > j_max))
    throw Error("bounded table " + subject + " cannot answer (" + std::to_string(i) + "," + std::to_string(j) +
                ") outside its certified region");
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total() const {
  long long s = 0;
  for (const auto& [k, v] : entries) s += v;
  return s;
}

static void require_total(const BettiTable& t, const char* op) {
  if (t.bounded)
    throw Error(std::string(op) + " refused: table '" + t.subject + "' is only certified for i <= " +
                std::to_string(t.i_max) + ", j <= " + std::to_string(t.j_max));
}

int proj_dim(const BettiTable& t) {
  require_total(t, "proj_dim");
  int p = 0;
  for (const auto& [k, v] : t.entries) p = std::max(p, k.first);
  return p;
}

int regularity(const BettiTable& t) {
  require_total(t, "regularity");
  int r = 0;
  for (const auto& [k, v] : t.entries) r = std::max(r, k.second - k.first);
  return r;
}

std::vector<ExtremalEntry> extremal_betti(const BettiTable& t) {
  require_total(t, "extremal_betti");
  std::vector<ExtremalEntry> out;
  for (const auto& [pos, v] : t.entries) {
    const auto [i, j] = pos;
    bool dominated = false;
    for (const auto& [pos2, v2] : t.entries) {
      const auto [k, l] = pos2;
      if (pos2 != pos && k >= i && l - k >= j - i) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back({i, j, v});
  }
  std::sort(out.begin(), out.end(), [](const ExtremalEntry& a, const ExtremalEntry& b) {
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });
  return out;
}

long long binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

BettiTable betti_from_linear_quotients(const LinearQuotientsProfile& profile) {
  if (!profile.success()) {
    std::string ev;
    for (const auto& m : profile.failure_evidence) {
      if (!ev.empty()) ev += ", ";
      ev += m.str();
    }
    throw Error("unusable profile: linear quotients fail at generator " +
                std::to_string(profile.failure_index + 1) + " with non-variable colon generators {" + ev + "}");
  }
  BettiTable t;
  t.subject = "S/I";
  t.add(0, 0, 1);
  for (size_t l = 0; l < profile.ordered_generators.size(); ++l) {
    const int d = profile.ordered_generators[l].degree();
    const int q = profile.q[l];
    for (int k = 0; k <= q; ++k) t.add(k + 1, k + d, binomial_coefficient(q, k));
  }
  return t;
}

BettiTable betti_numbers_closed_form(int m, int n) {
  if (n < 1 || m < n)
    throw Error("closed-form table needs m >= n >= 1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  BettiTable t;
  t.subject = "S/ini(J_G), G = K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  t.add(0, 0, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = m + 1; j <= m + n; ++j) {
      const int q = i + j - m - 2;
      for (int k = 0; k <= q; ++k) t.add(k + 1, k + 2, binomial_coefficient(q, k));
    }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = 1; k <= n; ++k) {
        const int q = n + k + j - 3;
        for (int s = 0; s <= q; ++s) t.add(s + 1, s + 3, binomial_coefficient(q, s));
      }
  if (n > 1) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= m; ++k) {
          const int q = m + k + j - 3;
          for (int s = 0; s <= q; ++s) t.add(s + 1, s + 3, binomial_coefficient(q, s));
        }
  }
  return t;
}

BettiTable betti_complete_intersection(const std::vector<int>& degrees) {
  if (degrees.empty()) throw Error("complete intersection needs at least one degree");
  for (int d : degrees)
    if (d < 1) throw Error("complete intersection degrees must be positive");
  BettiTable t;
  t.subject = "S/(regular sequence)";
  // product of (1 + z*w^d) over the degrees: coefficient of z^i w^j
  std::map<std::pair<int, int>, long long> poly{{{0, 0}, 1}};
  for (int d : degrees) {
    auto next = poly;
    for (const auto& [k, v] : poly) next[{k.first + 1, k.second + d}] += v;
    poly = std::move(next);
  }
  for (const auto& [k, v] : poly) t.add(k.first, k.second, v);
  return t;
}

PaperReference paper_reference_values_cycle(int n) {
  if (n < 4) throw Error("published cycle values cover n >= 4, got " + std::to_string(n));
  PaperReference r;
  r.family = "C_" + std::to_string(n);
  r.projdim = n;
  r.reg = n - 2;
  r.corner = {n, 2 * n - 2, binomial_coefficient(n - 1, 2) - 1};
  return r;
}

PaperReference paper_reference_values_kmn(int m, int n) {
  if (n < 1 || m < n)
    throw Error("published bipartite values need m >= n >= 1, got m=" + std::to_string(m) +
                " n=" + std::to_string(n));
  if (m == 1 && n == 1) throw Error("published bipartite values do not cover the single-edge case m = n = 1");
  PaperReference r;
  r.family = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  r.projdim = (n == 1) ? m : 2 * m + n - 2;
  r.reg = 2;
  r.corner = {r.projdim, r.projdim + 2, (n == 1) ? m - 1 : n - 1};
  return r;
}

}  // namespace bei
