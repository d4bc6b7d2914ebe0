#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bei/monomial_ideal.hpp"

namespace bei {

struct ExtremalEntry {
  int i = 0;
  int j = 0;
  long long value = 0;
  friend bool operator==(const ExtremalEntry&, const ExtremalEntry&) = default;
};

// Graded Betti numbers of a quotient S/I: entries (i, j) -> beta_{i,j}(S/I),
// with beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1. Entry (0,0) = 1 for
// proper I; zero entries are never stored. A bounded table is only certified
// on i <= i_max, j <= j_max and refuses projdim/reg/extremal extraction.
struct BettiTable {
  std::string subject;
  std::map<std::pair<int, int>, long long> entries;
  bool bounded = false;
  int i_max = -1;
  int j_max = -1;

  void add(int i, int j, long long v);
  long long at(int i, int j) const;  // 0 when absent (bounded tables refuse outside the region)
  long long total() const;           // sum of all entries
};

int proj_dim(const BettiTable& t);
int regularity(const BettiTable& t);
// Nonzero beta_{i,j} with beta_{k,l} = 0 for all (k,l) != (i,j), k >= i,
// l - k >= j - i; sorted by i. Positions form an antichain in (i, j-i).
std::vector<ExtremalEntry> extremal_betti(const BettiTable& t);

// Ideal-level beta_{t,t+d}(I) = sum over generators of degree d of C(q_l, t),
// shifted to S/I level; requires a successful profile.
BettiTable betti_from_linear_quotients(const LinearQuotientsProfile& profile);

// The closed-form table for S/ini of the complete bipartite ideal, assembled
// from the displayed sums (case split n = 1 vs n > 1), no colons computed.
BettiTable betti_numbers_closed_form(int m, int n);

// Koszul complex of a regular sequence: beta_{i,j}(S/(f_1..f_c)) counts
// i-subsets of the degree multiset summing to j.
BettiTable betti_complete_intersection(const std::vector<int>& degrees);

struct PaperReference {
  std::string family;
  int projdim = 0;
  int reg = 0;
  ExtremalEntry corner;
};

// Published reference values for S/J_G: cycles n >= 4 and complete bipartite
// graphs (m, n) != (1, 1) with m >= n >= 1. For m = n > 1 the published corner
// value is n - 1; see the conjecture report for the adjudication of that
// value against the closed-form evaluation and the oracles.
PaperReference paper_reference_values_cycle(int n);
PaperReference paper_reference_values_kmn(int m, int n);

long long binomial_coefficient(int n, int k);

}  // namespace bei
