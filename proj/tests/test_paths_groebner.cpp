#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bei/groebner.hpp"
#include "bei/paths.hpp"

using namespace bei;

namespace {

long long expected_cycle_count(int n) { return n + static_cast<long long>(n) * (n - 3) / 2; }
long long expected_kmn_count(int m, int n) {
  return static_cast<long long>(m) * n + static_cast<long long>(m) * (m - 1) / 2 * n +
         static_cast<long long>(n) * (n - 1) / 2 * m;
}

bool is_path_in(const Graph& g, const std::vector<int>& seq) {
  for (std::size_t t = 0; t + 1 < seq.size(); ++t)
    if (!g.adjacent(seq[t], seq[t + 1])) return false;
  return true;
}

// re-check the three admissibility conditions independently of the enumerator
bool admissible_by_definition(const Graph& g, const std::vector<int>& seq) {
  const int i = seq.front(), j = seq.back();
  if (i >= j) return false;
  std::set<int> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return false;
  if (!is_path_in(g, seq)) return false;
  const std::vector<int> interior(seq.begin() + 1, seq.end() - 1);
  for (int v : interior)
    if (v > i && v < j) return false;
  const int r = static_cast<int>(interior.size());
  for (int mask = 0; mask < (1 << r) - 1; ++mask) {
    std::vector<int> sub = {i};
    for (int t = 0; t < r; ++t)
      if (mask & (1 << t)) sub.push_back(interior[t]);
    sub.push_back(j);
    if (is_path_in(g, sub)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("admissible paths of C_4") {
  const Graph g = make_cycle(4);
  const auto paths = enumerate_admissible_paths(g);
  REQUIRE(paths.size() == 6);
  std::set<std::vector<int>> got;
  for (const auto& p : paths) got.insert(p.vertices);
  CHECK(got.count({1, 2}));
  CHECK(got.count({2, 3}));
  CHECK(got.count({3, 4}));
  CHECK(got.count({1, 4}));
  CHECK(got.count({1, 4, 3}));
  CHECK(got.count({2, 1, 4}));
}

TEST_CASE("admissible paths of K_{2,2} and K_{1,1}") {
  const auto paths = enumerate_admissible_paths(make_complete_bipartite(2, 2));
  REQUIRE(paths.size() == 8);
  std::set<std::vector<int>> got;
  for (const auto& p : paths) got.insert(p.vertices);
  CHECK(got.count({1, 3, 2}));
  CHECK(got.count({1, 4, 2}));
  CHECK(got.count({3, 1, 4}));
  CHECK(got.count({3, 2, 4}));

  CHECK(enumerate_admissible_paths(make_complete_bipartite(1, 1)).size() == 1);
}

TEST_CASE("admissible path counts match the closed-form generator counts") {
  for (int n = 4; n <= 12; ++n)
    CHECK(static_cast<long long>(enumerate_admissible_paths(make_cycle(n)).size()) ==
          expected_cycle_count(n));
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n)
      CHECK(static_cast<long long>(enumerate_admissible_paths(make_complete_bipartite(m, n)).size()) ==
            expected_kmn_count(m, n));
}

TEST_CASE("every enumerated path passes an independent admissibility check") {
  for (const Graph& g : {make_cycle(6), make_complete_bipartite(3, 2),
                         make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}})}) {
    const auto paths = enumerate_admissible_paths(g);
    for (const auto& p : paths) CHECK(admissible_by_definition(g, p.vertices));
    // deterministic order: sorted by (i, j) then lex on the sequence
    auto sorted = paths;
    std::sort(sorted.begin(), sorted.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
      if (a.from() != b.from()) return a.from() < b.from();
      if (a.to() != b.to()) return a.to() < b.to();
      return a.vertices < b.vertices;
    });
    for (std::size_t k = 0; k < paths.size(); ++k) CHECK(paths[k].vertices == sorted[k].vertices);
  }
}

TEST_CASE("path monomials") {
  const Graph g = make_cycle(4);
  for (const auto& p : enumerate_admissible_paths(g)) {
    if (p.vertices.size() == 2) CHECK(path_monomial(p, 4).is_one());
    if (p.vertices == std::vector<int>{1, 4, 3}) CHECK(path_monomial(p, 4) == Monomial::x(4, 4));
    if (p.vertices == std::vector<int>{2, 1, 4}) CHECK(path_monomial(p, 4) == Monomial::y(1, 4));
  }
}

TEST_CASE("groebner basis elements and leads") {
  const GroebnerBasis one = groebner_basis(make_complete_bipartite(1, 1));
  REQUIRE(one.elements.size() == 1);
  CHECK(one.elements[0].str() == "x1*y2 - x2*y1");

  const GroebnerBasis c4 = groebner_basis(make_cycle(4));
  std::set<std::string> leads;
  for (const Binomial& b : c4.elements) leads.insert(b.lead.str());
  CHECK(leads == std::set<std::string>{"x1*y2", "x2*y3", "x3*y4", "x1*y4", "x1*x4*y3", "x2*y1*y4"});

  const GroebnerBasis k21 = groebner_basis(make_complete_bipartite(2, 1));
  std::set<std::string> leads21;
  for (const Binomial& b : k21.elements) leads21.insert(b.lead.str());
  CHECK(leads21 == std::set<std::string>{"x1*y3", "x2*y3", "x1*x3*y2"});
}

TEST_CASE("initial ideal matches the closed forms") {
  SUBCASE("C_4 generator list") {
    const MonomialIdeal I = initial_ideal(make_cycle(4));
    std::set<std::string> got;
    for (const Monomial& u : I.gens) got.insert(u.str());
    CHECK(got == std::set<std::string>{"x1*y2", "x2*y3", "x3*y4", "x1*y4", "x1*x4*y3", "x2*y1*y4"});
  }
  SUBCASE("C_5 degree-3 generators") {
    const MonomialIdeal I = initial_ideal(make_cycle(5));
    std::set<std::string> deg3;
    for (const Monomial& u : I.gens)
      if (u.degree() == 3) deg3.insert(u.str());
    CHECK(deg3 == std::set<std::string>{"x1*x5*y4", "x2*y1*y5"});
  }
  SUBCASE("K_{2,2} cubics") {
    const MonomialIdeal I = initial_ideal(make_complete_bipartite(2, 2));
    std::set<std::string> deg3;
    for (const Monomial& u : I.gens)
      if (u.degree() == 3) deg3.insert(u.str());
    CHECK(deg3 == std::set<std::string>{"x1*x3*y2", "x1*x4*y2", "x3*y1*y4", "x3*y2*y4"});
  }
  SUBCASE("K_{3,1} full closed form") {
    const MonomialIdeal I = closed_form_initial_kmn(3, 1);
    std::set<std::string> got;
    for (const Monomial& u : I.gens) got.insert(u.str());
    CHECK(got == std::set<std::string>{"x1*y4", "x2*y4", "x3*y4", "x1*x4*y2", "x1*x4*y3", "x2*x4*y3"});
  }
  SUBCASE("families agree with enumeration") {
    for (int n = 4; n <= 12; ++n) {
      const MonomialIdeal a = initial_ideal(make_cycle(n));
      const MonomialIdeal b = closed_form_initial_cycle(n);
      CHECK(a.gens == b.gens);
      CHECK(static_cast<long long>(a.gens.size()) == expected_cycle_count(n));
    }
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= m; ++n) {
        const MonomialIdeal a = initial_ideal(make_complete_bipartite(m, n));
        const MonomialIdeal b = closed_form_initial_kmn(m, n);
        CHECK(a.gens == b.gens);
        CHECK(static_cast<long long>(a.gens.size()) == expected_kmn_count(m, n));
      }
    CHECK(closed_form_initial_cycle(6).gens.size() == 6 + 9);
  }
  CHECK_THROWS_AS(closed_form_initial_cycle(2), Error);
  CHECK_THROWS_AS(closed_form_initial_kmn(1, 2), Error);
}

TEST_CASE("verify_groebner passes on cycles and complete bipartite graphs") {
  for (int n = 3; n <= 7; ++n) {
    const VerifyReport rep = verify_groebner(make_cycle(n));
    CHECK(rep.pass);
    CHECK(rep.spairs_ok);
    CHECK(rep.reduced_ok);
    CHECK(rep.ideal_match_ok);
    CHECK(rep.spair_count == static_cast<long long>(rep.basis_size) * (rep.basis_size - 1) / 2);
  }
  CHECK(verify_groebner(make_complete_bipartite(3, 2)).pass);
}

TEST_CASE("verify_basis fails on a mutilated basis") {
  const Graph g = make_cycle(4);
  const GroebnerBasis full = groebner_basis(g);
  std::vector<Polynomial> damaged;
  for (std::size_t k = 0; k + 1 < full.elements.size(); ++k)
    damaged.push_back(Polynomial(full.elements[k]));  // drop the last element
  const VerifyReport rep = verify_basis(g, damaged);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.first_failure.empty());
}

TEST_CASE("basis files round-trip") {
  std::ostringstream file;
  file << "# basis of C_4\n4\n";
  for (const Binomial& b : groebner_basis(make_cycle(4)).elements) file << b.str() << "\n";
  std::istringstream in(file.str());
  int n = 0;
  const std::vector<Polynomial> basis = parse_basis_file(in, n);
  CHECK(n == 4);
  REQUIRE(basis.size() == 6);
  const VerifyReport rep = verify_basis(make_cycle(4), basis);
  CHECK(rep.pass);

  std::istringstream bad("4\nx1*z2 - x2*y1\n");
  int bn = 0;
  CHECK_THROWS_AS(parse_basis_file(bad, bn), Error);
}
