#pragma once

#include <string>
#include <vector>

#include "bei/betti.hpp"
#include "bei/graph.hpp"
#include "bei/oracle_config.hpp"

namespace bei {

// For K_{n,n} the closed-form corner evaluation and the published corner value
// disagree; the report carries both together with what the oracle computed.
struct AdjudicationRecord {
  bool applicable = false;
  int corner_i = 0;
  int corner_j = 0;
  long long closed_form_value = 0;  // sum-formula evaluation at the corner
  long long published_value = 0;    // quoted corner value n-1
  long long oracle_value = 0;  // lcm-lattice value on the initial side
  std::string sides_with;      // "closed form", "published value", "both", "neither",
                               // or "undecided" when the initial-side oracle was refused
};

struct ConjectureReport {
  enum class Verdict { equal, unequal, undecided };

  std::string graph;
  Verdict verdict = Verdict::undecided;
  std::string undecided_reason;  // cap refusal text naming the blocking spot

  // Initial side: lcm-lattice oracle, total. Binomial side: Koszul spots at
  // the positions where the initial table is nonzero; zero elsewhere by
  // semicontinuity, so the table is total once every spot is within caps.
  BettiTable initial_table;
  BettiTable binomial_table;
  std::vector<ExtremalEntry> initial_extremal;
  std::vector<ExtremalEntry> binomial_extremal;
  bool semicontinuity_ok = false;  // entrywise binomial <= initial

  AdjudicationRecord adjudication;

  bool decided() const { return verdict != Verdict::undecided; }
};

ConjectureReport check_conjecture(const Graph& g, const OracleConfig& cfg = {});

// Same check for K_{m,n}; when m = n > 1 the adjudication record is filled.
ConjectureReport check_conjecture_kmn(int m, int n, const OracleConfig& cfg = {});

}  // namespace bei
