#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bei/error.hpp"

namespace bei {

// Monomial in K[x_1..x_n, y_1..y_n], dense exponent vector of length 2n.
// Positions 0..n-1 hold x_1..x_n, positions n..2n-1 hold y_1..y_n.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  // 1-based variable index i in 1..n.
  static Monomial x(int i, int n);
  static Monomial y(int i, int n);
  static Monomial variable(int position, int nvars);  // 0-based position

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int pos) const { return e_[pos]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const;
  bool is_one() const;
  bool is_variable() const { return degree() == 1; }
  bool is_squarefree() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Display convention: factors x_1..x_n then y_1..y_n, e.g. "x1*x4*y3"; the
  // constant monomial prints as "1". Exponents > 1 print as "x2^3".
  std::string str() const;

private:
  std::vector<int> e_;
};

// Pure lex with x_1 > ... > x_n > y_1 > ... > y_n: the first position where
// exponents differ decides; the larger exponent wins.
// Returns <0, 0, >0 like a comparator.
int lex_compare(const Monomial& a, const Monomial& b);

bool lex_less(const Monomial& a, const Monomial& b);
bool lex_greater(const Monomial& a, const Monomial& b);

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

Monomial multiply(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// colon(a, b) = a / gcd(a, b): the minimal u with a | u*b.
Monomial colon(const Monomial& a, const Monomial& b);
// Exact division; throws if b does not divide a.
Monomial quotient(const Monomial& a, const Monomial& b);

// Order used for canonical generator lists: degree ascending, lex descending
// within a degree.
bool degree_then_lex_desc(const Monomial& a, const Monomial& b);

}  // namespace bei
