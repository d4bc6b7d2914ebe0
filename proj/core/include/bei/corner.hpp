#pragma once

#include <string>
#include <vector>

#include "bei/monomial_ideal.hpp"

namespace bei {

// One mapping-cone step I_k = I_{k-1} + (v_k): the colon I_{k-1} : (v_k) must
// be a regular sequence of n-1 monomials, quadric_count of degree 2 and
// variable_count variables, and the top Koszul degree of the colon shifted by
// deg v_k must land at 2n-2, so the step adds exactly 1 to the corner.
struct CornerStep {
  int k = 0;  // 1-based
  Monomial v;
  int i = 0;  // smallest x-index of v
  int j = 0;  // largest y-index of v
  MonomialIdeal colon_ideal;
  int quadric_count = 0;
  int variable_count = 0;
  int shifted_top_degree = 0;  // 2*quadric_count + variable_count + deg v
  long long running_total = 0;
};

// Base case: I_0 = J + (x_1y_n) with J the regular sequence of the n-1 path
// quadrics. J and J:(x_1y_n) are complete intersections of length n-1 whose
// Koszul complexes put the top Tor of S/J in degree 2n-2 and that of the
// colon, shifted by 2, in the same degree; the long exact sequence then gives
// Tor_n(S/I_0) = 0, so the corner entry of the base is zero.
struct CornerCertificate {
  int n = 0;
  MonomialIdeal base_colon;       // (x_1y_2, ..., x_{n-1}y_n) : (x_1y_n)
  int base_colon_quadrics = 0;    // n-3
  int base_colon_variables = 0;   // 2
  int base_projdim = 0;           // n-1, for S/J and S/(J:(x_1y_n)) alike
  long long base_corner_entry = 0;
  std::vector<CornerStep> steps;
  long long corner_value = 0;
};

// beta_{n,2n-2} of S/ini for the n-cycle via the mapping-cone induction over
// the non-edge generators in canonical order. Everything is derived from the
// complete-intersection structure of the colons; any shape violation aborts
// with a diagnostic naming the step.
CornerCertificate cycle_corner_betti(int n);

}  // namespace bei
