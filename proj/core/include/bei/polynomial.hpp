#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bei/monomial.hpp"

namespace bei {

// Pure-difference binomial lead - trail with lead > trail in lex.
struct Binomial {
  Monomial lead;
  Monomial trail;

  Binomial(Monomial l, Monomial t);
  std::string str() const;
};

// Sparse polynomial with exact integer coefficients; terms kept lex-descending
// so begin() is the leading term. No zero coefficients stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, long long, LexGreater>;

  Polynomial() = default;
  explicit Polynomial(const Binomial& b);
  static Polynomial from_monomial(const Monomial& m, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const Monomial& leading_monomial() const;
  long long leading_coefficient() const;

  void add_term(const Monomial& m, long long c);
  // this += c * m * f
  void add_scaled(const Polynomial& f, const Monomial& m, long long c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string str() const;

private:
  TermMap terms_;
};

// Normal form of f against the binomial set G: while some term is divisible by
// a lead(g), replace t = m*lead(g) by m*trail(g); the lex-largest reducible
// term is rewritten first, so the result is deterministic.
Polynomial reduce(const Polynomial& f, std::span<const Binomial> G);

// Normal form of a single monomial against G. For pure-difference binomials a
// monomial rewrites to a monomial with coefficient +1, so this stays in
// monomial land; the first basis element (in G's order) whose lead divides is
// applied at each step.
Monomial normal_form_monomial(const Monomial& m, std::span<const Binomial> G);

// lcm(lead g1, lead g2)/lead(g1) * g1 - lcm/lead(g2) * g2.
Polynomial s_polynomial(const Binomial& g1, const Binomial& g2);

// General integer-coefficient S-polynomial (used when verifying bases read
// from files): cross-scales by leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Normal form against general polynomials (leading-coefficient divisibility is
// handled by scaling f; only exact integer steps are taken, coefficients are
// cross-multiplied). Reduction of c*t by g with lc(g) = d rewrites
// d*f - (c*t/lt(g))*g, so membership of the ideal over Q is what is tested.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G);

}  // namespace bei
