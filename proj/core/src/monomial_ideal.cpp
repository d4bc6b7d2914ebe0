#include "bei/monomial_ideal.hpp"

#include <algorithm>

namespace bei {

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

std::string MonomialIdeal::str() const {
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ", ";
    out += gens[k].str();
  }
  return out + ")";
}

MonomialIdeal minimal_generators(int nvars, std::vector<Monomial> gens) {
  std::vector<Monomial> sorted = paper_generator_order(std::move(gens));
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> minimal;
  for (const auto& g : sorted) {
    if (g.nvars() != nvars) throw Error("generator ambient mismatch");
    bool redundant = false;
    // sorted by degree, so only previously kept generators can divide g
    for (const auto& h : minimal) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  MonomialIdeal I;
  I.nvars = nvars;
  I.gens = std::move(minimal);
  return I;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& v) {
  std::vector<Monomial> out;
  out.reserve(I.gens.size());
  for (const auto& g : I.gens) out.push_back(colon(g, v));
  return minimal_generators(I.nvars, std::move(out));
}

bool is_variable_generated(const MonomialIdeal& I) {
  for (const auto& g : I.gens)
    if (g.degree() != 1) return false;
  return true;
}

bool is_monomial_regular_sequence(const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.is_one()) return false;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!gcd(gens[a], gens[b]).is_one()) return false;
  return true;
}

std::vector<Monomial> paper_generator_order(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(), degree_then_lex_desc);
  return gens;
}

LinearQuotientsProfile linear_quotients_profile(const std::vector<Monomial>& ordered) {
  LinearQuotientsProfile prof;
  prof.ordered_generators = ordered;
  if (ordered.empty()) return prof;
  const int nvars = ordered.front().nvars();
  prof.q.push_back(0);
  MonomialIdeal prefix = minimal_generators(nvars, {ordered.front()});
  for (size_t l = 1; l < ordered.size(); ++l) {
    const MonomialIdeal c = colon_by_monomial(prefix, ordered[l]);
    std::vector<Monomial> nonvars;
    for (const auto& g : c.gens)
      if (g.degree() != 1) nonvars.push_back(g);
    if (!nonvars.empty()) {
      prof.status = LinearQuotientsProfile::Status::failure;
      prof.failure_index = static_cast<int>(l);
      prof.colon_at_failure = c.gens;
      prof.failure_evidence = std::move(nonvars);
      prof.q.clear();
      return prof;
    }
    prof.q.push_back(static_cast<int>(c.gens.size()));
    std::vector<Monomial> next = prefix.gens;
    next.push_back(ordered[l]);
    prefix = minimal_generators(nvars, std::move(next));
  }
  return prof;
}

}  // namespace bei
