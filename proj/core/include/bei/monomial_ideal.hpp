#pragma once

#include <string>
#include <vector>

#include "bei/monomial.hpp"

namespace bei {

// Monomial ideal held by its minimal generating set, sorted degree-ascending
// then lex-descending. The zero ideal is the empty set.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool contains(const Monomial& m) const;  // membership: some generator divides m
  std::string str() const;
};

MonomialIdeal minimal_generators(int nvars, std::vector<Monomial> gens);
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& v);
bool is_variable_generated(const MonomialIdeal& I);
// Monomials form a regular sequence iff their supports are pairwise disjoint
// (after dropping the constant monomial, which is not allowed here).
bool is_monomial_regular_sequence(const std::vector<Monomial>& gens);

// Degree ascending, lex descending within a degree; total and deterministic.
std::vector<Monomial> paper_generator_order(std::vector<Monomial> gens);

struct LinearQuotientsProfile {
  enum class Status { success, failure };
  Status status = Status::success;
  std::vector<Monomial> ordered_generators;
  std::vector<int> q;          // on success: q[l] = variable count of the l-th colon, q[0] = 0
  int failure_index = -1;      // 0-based index l of the offending generator
  std::vector<Monomial> colon_at_failure;      // full minimal generator set of the offending colon
  std::vector<Monomial> failure_evidence;      // its non-variable members

  bool success() const { return status == Status::success; }
};

// Successive colons (u_1..u_{l-1}) : (u_l); succeeds when each is generated by
// variables, otherwise stops at the first offender and keeps the evidence.
LinearQuotientsProfile linear_quotients_profile(const std::vector<Monomial>& ordered);

}  // namespace bei
