#include "bei/conjecture.hpp"

#include <utility>

#include "bei/groebner.hpp"
#include "bei/koszul.hpp"
#include "bei/lcm_lattice.hpp"

namespace bei {

namespace {

bool same_extremal(const std::vector<ExtremalEntry>& a, const std::vector<ExtremalEntry>& b) {
  return a == b;
}

}  // namespace

ConjectureReport check_conjecture(const Graph& g, const OracleConfig& cfg) {
  ConjectureReport rep;
  rep.graph = g.describe();

  if (g.edges.empty()) {  // J_G = 0: both sides are the trivial table of S
    rep.initial_table.subject = "S/ini(J_G)";
    rep.initial_table.add(0, 0, 1);
    rep.binomial_table.subject = "S/J_G";
    rep.binomial_table.add(0, 0, 1);
    rep.initial_extremal = extremal_betti(rep.initial_table);
    rep.binomial_extremal = extremal_betti(rep.binomial_table);
    rep.semicontinuity_ok = true;
    rep.verdict = ConjectureReport::Verdict::equal;
    return rep;
  }

  MonomialIdeal ini;
  try {
    ini = initial_ideal(g);
    rep.initial_table = lcm_lattice_betti(ini, cfg);
  } catch (const Error& e) {
    rep.verdict = ConjectureReport::Verdict::undecided;
    rep.undecided_reason = std::string("initial side: ") + e.what();
    return rep;
  }
  rep.initial_table.subject = "S/ini(J_G)";
  rep.initial_extremal = extremal_betti(rep.initial_table);

  rep.binomial_table.subject = "S/J_G";
  rep.binomial_table.bounded = false;
  rep.semicontinuity_ok = true;
  const KoszulInput in = koszul_input_from_graph(g);
  for (const auto& [pos, ini_value] : rep.initial_table.entries) {
    long long v = 0;
    try {
      v = koszul_spot(in, pos.first, pos.second, cfg);
    } catch (const Error& e) {
      rep.verdict = ConjectureReport::Verdict::undecided;
      rep.undecided_reason = std::string("binomial side: ") + e.what();
      rep.binomial_table = BettiTable{};  // drop the uncertified partial table
      rep.semicontinuity_ok = false;
      return rep;
    }
    if (v > ini_value) rep.semicontinuity_ok = false;
    rep.binomial_table.add(pos.first, pos.second, v);
  }
  rep.binomial_extremal = extremal_betti(rep.binomial_table);

  rep.verdict = same_extremal(rep.initial_extremal, rep.binomial_extremal)
                    ? ConjectureReport::Verdict::equal
                    : ConjectureReport::Verdict::unequal;
  return rep;
}

ConjectureReport check_conjecture_kmn(int m, int n, const OracleConfig& cfg) {
  ConjectureReport rep = check_conjecture(make_complete_bipartite(m, n), cfg);
  if (m != n || m <= 1) return rep;

  AdjudicationRecord& adj = rep.adjudication;
  adj.applicable = true;
  adj.corner_i = 2 * m + n - 2;
  adj.corner_j = adj.corner_i + 2;
  adj.closed_form_value = betti_numbers_closed_form(m, n).at(adj.corner_i, adj.corner_j);
  adj.published_value = n - 1;
  if (rep.initial_table.entries.empty()) {  // the initial-side oracle itself was refused
    adj.sides_with = "undecided";
    return rep;
  }
  adj.oracle_value = rep.initial_table.at(adj.corner_i, adj.corner_j);
  if (adj.oracle_value == adj.closed_form_value && adj.oracle_value == adj.published_value)
    adj.sides_with = "both";
  else if (adj.oracle_value == adj.closed_form_value)
    adj.sides_with = "closed form";
  else if (adj.oracle_value == adj.published_value)
    adj.sides_with = "published value";
  else
    adj.sides_with = "neither";
  return rep;
}

}  // namespace bei
