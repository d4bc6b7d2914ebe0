#include "bei/modp.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bei {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldPrime::FieldPrime(long long prime) : p(prime) {
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
}

long long inverse_mod_p(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    const long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw Error("not invertible mod p");
  return ((t % p) + p) % p;
}

MatrixModP MatrixModP::from_dense(const std::vector<std::vector<long long>>& dense) {
  MatrixModP m;
  m.rows = static_cast<int>(dense.size());
  m.cols = m.rows == 0 ? 0 : static_cast<int>(dense[0].size());
  m.columns.resize(m.cols);
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(dense[r].size()) != m.cols) throw Error("ragged dense matrix");
    for (int c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0) m.columns[c].push_back({r, static_cast<int>(dense[r][c])});
  }
  return m;
}

// Column reduction keyed on the largest row index present in each column
// (persistence style): deterministic and effective on boundary matrices.
long long rank_mod_p(const MatrixModP& m, const FieldPrime& field) {
  const long long p = field.p;
  std::vector<std::vector<std::pair<int, int>>> pivot_by_low(m.rows);
  std::vector<char> occupied(m.rows, 0);
  long long rank = 0;

  auto add_scaled = [&](std::vector<std::pair<int, int>>& col, const std::vector<std::pair<int, int>>& other,
                        long long factor) {
    // col += factor * other; both sorted by row
    std::vector<std::pair<int, int>> out;
    out.reserve(col.size() + other.size());
    size_t a = 0, b = 0;
    while (a < col.size() || b < other.size()) {
      if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
        out.push_back(col[a++]);
      } else if (a == col.size() || other[b].first < col[a].first) {
        const long long v = (other[b].second * factor) % p;
        if (v != 0) out.push_back({other[b].first, static_cast<int>(v)});
        ++b;
      } else {
        const long long v = (col[a].second + other[b].second * factor) % p;
        if (v != 0) out.push_back({col[a].first, static_cast<int>(v)});
        ++a;
        ++b;
      }
    }
    col = std::move(out);
  };

  for (int c = 0; c < m.cols; ++c) {
    std::vector<std::pair<int, int>> col;
    col.reserve(m.columns[c].size());
    for (auto [r, v] : m.columns[c]) {
      const long long nv = ((v % p) + p) % p;
      if (nv != 0) col.push_back({r, static_cast<int>(nv)});
    }
    while (!col.empty()) {
      const int low = col.back().first;
      if (!occupied[low]) {
        // normalize so the low entry is 1
        const long long inv = inverse_mod_p(col.back().second, p);
        for (auto& [r, v] : col) v = static_cast<int>((v * inv) % p);
        pivot_by_low[low] = std::move(col);
        occupied[low] = 1;
        ++rank;
        break;
      }
      const long long factor = p - col.back().second;  // eliminate the low entry
      add_scaled(col, pivot_by_low[low], factor);
    }
  }
  return rank;
}

long long rank_exact_rationals(const MatrixModP& m, int column_cap) {
  if (m.cols > column_cap)
    throw CapError("exact-rationals rank refused: " + std::to_string(m.cols) + " columns exceed cap " +
                std::to_string(column_cap));
  std::vector<std::vector<__int128>> a(m.rows, std::vector<__int128>(m.cols, 0));
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) a[r][c] = v;

  const __int128 limit = (__int128)1 << 100;
  long long rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < m.rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = static_cast<int>(rank) + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c) {
        __int128 t = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
        if (t > limit || t < -limit) throw Error("exact-rationals rank overflow");
        a[r][c] = t / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace bei
