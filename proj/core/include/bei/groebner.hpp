#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"
#include "bei/paths.hpp"
#include "bei/polynomial.hpp"

namespace bei {

// One element u_pi * f_ij per admissible path, lead u_pi*x_i*y_j.
struct GroebnerBasis {
  int n = 0;
  std::vector<Binomial> elements;
  std::vector<AdmissiblePath> paths;  // same order as elements
};

GroebnerBasis groebner_basis(const Graph& g);

// Minimal generators of the ideal of leads of groebner_basis(g).
MonomialIdeal initial_ideal(const Graph& g);

// Generators emitted straight from the closed-form index sets, no path
// enumeration. Complete bipartite: x_i*y_{m+j}; x_i*x_{m+k}*y_{m+j} for i < j;
// x_{m+i}*y_k*y_{m+j} for i < j. Cycle: edge leads plus
// x_i*x_{j+1}...x_n*y_1...y_{i-1}*y_j for 2 <= j-i <= n-2.
MonomialIdeal closed_form_initial_kmn(int m, int n);
MonomialIdeal closed_form_initial_cycle(int n);

struct VerifyReport {
  bool pass = false;
  int basis_size = 0;
  long long spair_count = 0;
  long long spairs_reduced_to_zero = 0;
  bool spairs_ok = false;
  bool reduced_ok = false;
  bool ideal_match_ok = false;  // edge binomials reduce to 0, basis lies in the edge ideal
  std::string first_failure;    // empty when pass
};

struct VerifyCaps {
  long long max_spairs = 200000;
};

// S-pair + reducedness verification of the computed basis of g.
VerifyReport verify_groebner(const Graph& g, const VerifyCaps& caps = {});

// Same checks for an explicit basis (e.g. read from a file), verified against
// the edge ideal of g.
VerifyReport verify_basis(const Graph& g, const std::vector<Polynomial>& basis, const VerifyCaps& caps = {});

// Basis file: first data line is n; each later non-empty line is one
// polynomial such as "x1*x4*y3 - x3*x4*y1"; '#' lines are comments.
std::vector<Polynomial> parse_basis_file(std::istream& in, int& n_out);
std::vector<Polynomial> load_basis_file(const std::string& path, int& n_out);

}  // namespace bei
