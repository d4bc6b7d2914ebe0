#include "bei/polynomial.hpp"

#include <numeric>

namespace bei {

Binomial::Binomial(Monomial l, Monomial t) : lead(std::move(l)), trail(std::move(t)) {
  if (lex_compare(lead, trail) <= 0) throw Error("binomial lead must exceed trail: " + lead.str() + " - " + trail.str());
}

std::string Binomial::str() const { return lead.str() + " - " + trail.str(); }

Polynomial::Polynomial(const Binomial& b) {
  add_term(b.lead, 1);
  add_term(b.trail, -1);
}

Polynomial Polynomial::from_monomial(const Monomial& m, long long c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw Error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

long long Polynomial::leading_coefficient() const {
  if (is_zero()) throw Error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& f, const Monomial& m, long long c) {
  for (const auto& [mono, coef] : f.terms()) add_term(multiply(mono, m), coef * c);
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const long long a = c < 0 ? -c : c;
    if (a != 1 || m.is_one()) {
      out += std::to_string(a);
      if (!m.is_one()) out += "*";
    }
    if (!m.is_one()) out += m.str();
  }
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Binomial> G) {
  Polynomial cur = f;
  while (true) {
    bool rewrote = false;
    // terms are lex-descending, so the first reducible term found is the
    // lex-largest one
    for (const auto& [t, c] : cur.terms()) {
      for (const auto& g : G) {
        if (!divides(g.lead, t)) continue;
        // copy before add_term invalidates the node t and c point into
        const Monomial quot = multiply(quotient(t, g.lead), g.trail);
        const Monomial told = t;
        const long long cold = c;
        cur.add_term(told, -cold);
        cur.add_term(quot, cold);
        rewrote = true;
        break;
      }
      if (rewrote) break;
    }
    if (!rewrote) return cur;
  }
}

Monomial normal_form_monomial(const Monomial& m, std::span<const Binomial> G) {
  Monomial cur = m;
  while (true) {
    bool rewrote = false;
    for (const auto& g : G) {
      if (divides(g.lead, cur)) {
        cur = multiply(quotient(cur, g.lead), g.trail);
        rewrote = true;
        break;
      }
    }
    if (!rewrote) return cur;
  }
}

Polynomial s_polynomial(const Binomial& g1, const Binomial& g2) {
  const Monomial L = lcm(g1.lead, g2.lead);
  Polynomial s;
  s.add_scaled(Polynomial(g1), quotient(L, g1.lead), 1);
  s.add_scaled(Polynomial(g2), quotient(L, g2.lead), -1);
  return s;
}

static long long abs_ll(long long v) { return v < 0 ? -v : v; }

static void divide_by_content(Polynomial& f) {
  long long g = 0;
  for (const auto& [m, c] : f.terms()) g = std::gcd(g, abs_ll(c));
  if (g <= 1) return;
  Polynomial out;
  for (const auto& [m, c] : f.terms()) out.add_term(m, c / g);
  f = out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error("s_polynomial of zero polynomial");
  const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  const long long cf = f.leading_coefficient(), cg = g.leading_coefficient();
  const long long l = std::lcm(abs_ll(cf), abs_ll(cg));
  Polynomial s;
  s.add_scaled(f, quotient(L, f.leading_monomial()), l / cf);
  s.add_scaled(g, quotient(L, g.leading_monomial()), -(l / cg));
  divide_by_content(s);
  return s;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G) {
  Polynomial cur = f;
  while (true) {
    bool rewrote = false;
    for (const auto& [t, c] : cur.terms()) {
      for (const auto& g : G) {
        if (g.is_zero() || !divides(g.leading_monomial(), t)) continue;
        const Monomial m = quotient(t, g.leading_monomial());
        const long long d = g.leading_coefficient();
        if (c % d == 0) {
          cur.add_scaled(g, m, -(c / d));
        } else {
          const long long l = std::lcm(abs_ll(c), abs_ll(d));
          Polynomial scaled;
          scaled.add_scaled(cur, Monomial::one(t.nvars()), l / c);
          scaled.add_scaled(g, m, -(l / d));
          cur = scaled;
        }
        divide_by_content(cur);
        rewrote = true;
        break;
      }
      if (rewrote) break;
    }
    if (!rewrote) return cur;
  }
}

}  // namespace bei
