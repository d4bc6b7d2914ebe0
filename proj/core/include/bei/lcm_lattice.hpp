#pragma once

#include <map>
#include <vector>

#include "bei/betti.hpp"
#include "bei/monomial_ideal.hpp"
#include "bei/oracle_config.hpp"

namespace bei {

// All lcms of nonempty generator subsets, sorted by degree then exponent
// order; the bottom element 1 is not stored.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I);

// Reduced homology dimensions, by simplicial dimension, of the order complex
// of the open interval (0, b) in the lcm lattice. Dimension -1 is included
// (its homology is 1 exactly when the interval is empty).
std::map<int, long long> interval_homology(const MonomialIdeal& I, const std::vector<Monomial>& lattice,
                                           const Monomial& b, const OracleConfig& cfg);

// Total table of S/I: beta_{i,j} = sum over lattice elements b of degree j of
// dim H~_{i-2} of the open interval below b.
BettiTable lcm_lattice_betti(const MonomialIdeal& I, const OracleConfig& cfg = {},
                             bool squarefree_required = true);

}  // namespace bei
