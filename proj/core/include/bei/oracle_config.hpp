#pragma once

#include "bei/modp.hpp"

namespace bei {

// Knobs shared by the two oracles. Caps are hard refusals (the operations
// throw, naming the offending size), never silent approximations.
struct OracleConfig {
  FieldPrime field{};

  // koszul_betti: max dimension of any Koszul spot used as a column source
  long long spot_cap = 20000;
  // lcm_lattice_betti: max lattice size
  long long lattice_cap = 100000;
  // literal order-complex mode: max total chain count per interval
  long long chain_cap = 2000000;

  int threads = 1;

  // compute interval homology ranks over exact rationals instead of Z/p
  // (tiny instances only; tie-breaker against characteristic accidents)
  bool exact_rationals = false;

  // crosscut: homology of each open interval evaluated through the crosscut
  // complex of its atoms and the nerve of that complex's canonical cover of
  // simplices (homotopy equivalent, exact). chains: the literal order-complex
  // chain complex, for cross-checks and small instances.
  enum class LcmMethod { crosscut, chains };
  LcmMethod lcm_method = LcmMethod::crosscut;
};

}  // namespace bei
