#pragma once

#include <vector>

#include "bei/betti.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/monomial_ideal.hpp"
#include "bei/oracle_config.hpp"

namespace bei {

// What the Koszul oracle reduces against: the reduced basis of an edge ideal,
// or a monomial ideal treated lead-only (normal form discards divisible
// monomials).
struct KoszulInput {
  int n = 0;  // vertices; the ring has 2n variables
  std::vector<Binomial> basis;
  MonomialIdeal leads;
  bool monomial_mode = false;
};

KoszulInput koszul_input_from_graph(const Graph& g);
KoszulInput koszul_input_from_monomial_ideal(const MonomialIdeal& I);

// All degree-d monomials in the ambient ring divisible by no generator of
// leads, in lex-descending order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& leads, int degree);

// dim of the Koszul spot (i, j): C(2n, i) * #standard monomials of degree j-i.
long long koszul_spot_dimension(const KoszulInput& in, int i, int j);

// beta_{i,j}(S/J) over Z/p: homology of the Koszul complex on all 2n
// variables tensored with S/J, computed at one (homological, internal) spot.
// The computation splits by vertex multidegree, which both boundary maps
// preserve. Refuses when a column-source spot exceeds cfg.spot_cap.
long long koszul_spot(const KoszulInput& in, int i, int j, const OracleConfig& cfg = {});

// Bounded table over 0 <= i <= i_max, i <= j <= j_max.
BettiTable koszul_betti(const KoszulInput& in, int i_max, int j_max, const OracleConfig& cfg = {});

// Full (unblocked) boundary matrix from spot (i, j) to (i-1, j), entries +-1;
// basis order is (variable subset, standard monomial) lexicographic. Intended
// for small-instance sanity checks such as composing consecutive maps.
MatrixModP koszul_boundary(const KoszulInput& in, int i, int j);

}  // namespace bei
