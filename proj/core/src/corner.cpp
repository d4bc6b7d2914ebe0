#include "bei/corner.hpp"

#include <sstream>

#include "bei/betti.hpp"
#include "bei/groebner.hpp"

namespace bei {

namespace {

int smallest_x_index(const Monomial& v, int n) {
  for (int i = 1; i <= n; ++i)
    if (v.exponent(i - 1) > 0) return i;
  return 0;
}

int largest_y_index(const Monomial& v, int n) {
  for (int j = n; j >= 1; --j)
    if (v.exponent(n + j - 1) > 0) return j;
  return 0;
}

[[noreturn]] void step_failure(const CornerStep& s, const std::string& what) {
  std::ostringstream os;
  os << "cycle corner step k=" << s.k << " (v=" << s.v.str() << ", colon = " << s.colon_ideal.str()
     << "): " << what;
  throw Error(os.str());
}

// Koszul complex of a complete intersection: top Tor sits at (c, sum of
// degrees) with value 1. Checks that and the projective dimension = c.
void check_ci_top(const std::vector<int>& degrees, const std::string& who) {
  const BettiTable t = betti_complete_intersection(degrees);
  const int c = static_cast<int>(degrees.size());
  int top = 0;
  for (int d : degrees) top += d;
  if (proj_dim(t) != c || t.at(c, top) != 1)
    throw Error("cycle corner base: " + who + " is not resolved by its Koszul complex as expected");
}

}  // namespace

CornerCertificate cycle_corner_betti(int n) {
  if (n < 4) throw Error("cycle_corner_betti: need n >= 4");
  const MonomialIdeal ini = closed_form_initial_cycle(n);

  std::vector<Monomial> quadrics;
  std::vector<Monomial> higher;
  for (const Monomial& g : ini.gens) (g.degree() == 2 ? quadrics : higher).push_back(g);

  CornerCertificate cert;
  cert.n = n;

  // Base ideal: J = path quadrics (all edge leads except x_1y_n).
  const Monomial closing = multiply(Monomial::x(1, n), Monomial::y(n, n));
  std::vector<Monomial> path_quadrics;
  for (const Monomial& g : quadrics)
    if (g != closing) path_quadrics.push_back(g);
  if (static_cast<int>(path_quadrics.size()) != n - 1 || !is_monomial_regular_sequence(path_quadrics))
    throw Error("cycle corner base: path quadrics do not form a regular sequence of length n-1");
  cert.base_colon = colon_by_monomial(minimal_generators(2 * n, path_quadrics), closing);
  for (const Monomial& g : cert.base_colon.gens) {
    if (g.degree() == 1)
      ++cert.base_colon_variables;
    else if (g.degree() == 2)
      ++cert.base_colon_quadrics;
    else
      throw Error("cycle corner base: colon generator " + g.str() + " has degree > 2");
  }
  if (!is_monomial_regular_sequence(cert.base_colon.gens) || cert.base_colon_quadrics != n - 3 ||
      cert.base_colon_variables != 2)
    throw Error("cycle corner base: J:(x_1y_n) is not a regular sequence of n-3 quadrics and 2 variables, got " +
                cert.base_colon.str());

  // Top Tor of S/J lives in degree 2n-2, that of S/(J:(x_1y_n))(-2) in
  // (2n-4)+2 = 2n-2 as well, both one-dimensional, and both vanish in
  // homological degree n; the long exact sequence of
  // 0 -> S/(J:(x_1y_n))(-2) -> S/J -> S/I_0 -> 0 forces Tor_n(S/I_0) = 0.
  check_ci_top(std::vector<int>(n - 1, 2), "J");
  std::vector<int> colon_degrees;
  for (const Monomial& g : cert.base_colon.gens) colon_degrees.push_back(g.degree());
  check_ci_top(colon_degrees, "J:(x_1y_n)");
  cert.base_projdim = n - 1;
  cert.base_corner_entry = 0;

  long long total = cert.base_corner_entry;
  std::vector<Monomial> current = quadrics;
  for (std::size_t k = 0; k < higher.size(); ++k) {
    const MonomialIdeal prev = minimal_generators(2 * n, current);

    CornerStep s;
    s.k = static_cast<int>(k) + 1;
    s.v = higher[k];
    s.i = smallest_x_index(s.v, n);
    s.j = largest_y_index(s.v, n);
    s.colon_ideal = colon_by_monomial(prev, s.v);

    for (const Monomial& g : s.colon_ideal.gens) {
      if (g.degree() == 1)
        ++s.variable_count;
      else if (g.degree() == 2)
        ++s.quadric_count;
      else
        step_failure(s, "colon generator " + g.str() + " has degree > 2");
    }
    if (!is_monomial_regular_sequence(s.colon_ideal.gens))
      step_failure(s, "colon generators are not a regular sequence");
    if (s.variable_count + s.quadric_count != n - 1)
      step_failure(s, "colon has " + std::to_string(s.variable_count + s.quadric_count) +
                          " generators, expected n-1 = " + std::to_string(n - 1));
    if (s.quadric_count != s.j - s.i - 2)
      step_failure(s, "expected j-i-2 = " + std::to_string(s.j - s.i - 2) + " quadrics, found " +
                          std::to_string(s.quadric_count));
    if (s.variable_count != n - s.j + s.i + 1)
      step_failure(s, "expected n-j+i+1 = " + std::to_string(n - s.j + s.i + 1) +
                          " variables, found " + std::to_string(s.variable_count));
    s.shifted_top_degree = 2 * s.quadric_count + s.variable_count + s.v.degree();
    if (s.shifted_top_degree != 2 * n - 2)
      step_failure(s, "shifted top degree " + std::to_string(s.shifted_top_degree) +
                          " does not reach 2n-2 = " + std::to_string(2 * n - 2));

    // The colon is a complete intersection of length n-1, so the cone adds
    // exactly C(n-1, n-1) = 1 at (n, deg v + top) = (n, 2n-2).
    total += 1;
    s.running_total = total;
    cert.steps.push_back(std::move(s));
    current.push_back(higher[k]);
  }

  cert.corner_value = total;
  return cert;
}

}  // namespace bei
