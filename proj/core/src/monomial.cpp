#include "bei/monomial.hpp"

#include <numeric>

namespace bei {

static void check_index(int i, int n) {
  if (i < 1 || i > n) throw Error("variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

Monomial Monomial::x(int i, int n) {
  check_index(i, n);
  std::vector<int> e(2 * n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::y(int i, int n) {
  check_index(i, n);
  std::vector<int> e(2 * n, 0);
  e[n + i - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::variable(int position, int nvars) {
  if (position < 0 || position >= nvars) throw Error("variable position out of range");
  std::vector<int> e(nvars, 0);
  e[position] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Monomial::is_one() const {
  for (int v : e_)
    if (v != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (int v : e_)
    if (v > 1) return false;
  return true;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  const int n = nvars() / 2;
  std::string out;
  for (int pos = 0; pos < nvars(); ++pos) {
    if (e_[pos] == 0) continue;
    if (!out.empty()) out += '*';
    out += (pos < n) ? 'x' : 'y';
    out += std::to_string(pos < n ? pos + 1 : pos - n + 1);
    if (e_[pos] > 1) {
      out += '^';
      out += std::to_string(e_[pos]);
    }
  }
  return out;
}

static void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error("monomial ambient mismatch: " + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
}

int lex_compare(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (int k = 0; k < a.nvars(); ++k) {
    if (a.exponent(k) != b.exponent(k)) return a.exponent(k) > b.exponent(k) ? 1 : -1;
  }
  return 0;
}

bool lex_less(const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; }
bool lex_greater(const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; }

Monomial multiply(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.exponents());
  for (int k = 0; k < b.nvars(); ++k) e[k] += b.exponent(k);
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (int k = 0; k < a.nvars(); ++k)
    if (a.exponent(k) > b.exponent(k)) return false;
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.nvars());
  for (int k = 0; k < a.nvars(); ++k) e[k] = std::min(a.exponent(k), b.exponent(k));
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.nvars());
  for (int k = 0; k < a.nvars(); ++k) e[k] = std::max(a.exponent(k), b.exponent(k));
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(a.nvars());
  for (int k = 0; k < a.nvars(); ++k) e[k] = std::max(a.exponent(k) - b.exponent(k), 0);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw Error("quotient: " + b.str() + " does not divide " + a.str());
  std::vector<int> e(a.nvars());
  for (int k = 0; k < a.nvars(); ++k) e[k] = a.exponent(k) - b.exponent(k);
  return Monomial(std::move(e));
}

bool degree_then_lex_desc(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_greater(a, b);
}

}  // namespace bei
