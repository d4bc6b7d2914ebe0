#include <doctest.h>

#include <map>
#include <vector>

#include "bei/betti.hpp"
#include "bei/groebner.hpp"

using namespace bei;

using Entries = std::map<std::pair<int, int>, long long>;

TEST_CASE("betti table bookkeeping") {
  BettiTable t;
  t.subject = "test";
  t.add(1, 2, 3);
  t.add(1, 2, 4);
  t.add(2, 4, 0);  // ignored
  CHECK(t.at(1, 2) == 7);
  CHECK(t.at(2, 4) == 0);
  CHECK(t.total() == 7);
  t.add(1, 2, -7);  // cancels out of the map
  CHECK(t.entries.empty());
}

TEST_CASE("bounded tables refuse questions outside the certified region") {
  BettiTable t;
  t.subject = "partial";
  t.bounded = true;
  t.i_max = 2;
  t.j_max = 4;
  t.add(1, 2, 5);
  CHECK(t.at(1, 2) == 5);
  CHECK(t.at(2, 3) == 0);
  CHECK_THROWS_AS(t.at(3, 4), Error);
  CHECK_THROWS_AS(t.at(1, 5), Error);
  CHECK_THROWS_WITH_AS(proj_dim(t), doctest::Contains("certified"), Error);
  CHECK_THROWS_AS(regularity(t), Error);
  CHECK_THROWS_AS(extremal_betti(t), Error);
}

TEST_CASE("projective dimension, regularity, extremal entries") {
  BettiTable t;
  t.add(0, 0, 1);
  t.add(1, 2, 3);
  t.add(2, 4, 4);
  t.add(3, 5, 2);
  CHECK(proj_dim(t) == 3);
  CHECK(regularity(t) == 2);
  const auto ex = extremal_betti(t);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0] == ExtremalEntry{3, 5, 2});

  SUBCASE("an antichain gives several extremal entries") {
    BettiTable s;
    s.add(0, 0, 1);
    s.add(1, 2, 2);
    s.add(1, 3, 5);
    s.add(2, 3, 7);
    const auto e = extremal_betti(s);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == ExtremalEntry{1, 3, 5});
    CHECK(e[1] == ExtremalEntry{2, 3, 7});
  }
}

TEST_CASE("linear-quotient tables match the closed form on complete bipartite graphs") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n) {
      const auto ordered = paper_generator_order(initial_ideal(make_complete_bipartite(m, n)).gens);
      const BettiTable lq = betti_from_linear_quotients(linear_quotients_profile(ordered));
      const BettiTable cf = betti_numbers_closed_form(m, n);
      CHECK(lq.entries == cf.entries);
    }
}

TEST_CASE("closed-form tables, frozen values") {
  CHECK(betti_numbers_closed_form(1, 1).entries == Entries{{{0, 0}, 1}, {{1, 2}, 1}});
  CHECK(betti_numbers_closed_form(2, 1).entries ==
        Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 1}});
  CHECK(betti_numbers_closed_form(2, 2).entries ==
        Entries{{{0, 0}, 1},
                {{1, 2}, 4},
                {{1, 3}, 4},
                {{2, 3}, 4},
                {{2, 4}, 10},
                {{3, 4}, 1},
                {{3, 5}, 8},
                {{4, 6}, 2}});
  const BettiTable k31 = betti_numbers_closed_form(3, 1);
  CHECK(k31.entries == Entries{{{0, 0}, 1},
                               {{1, 2}, 3},
                               {{1, 3}, 3},
                               {{2, 3}, 3},
                               {{2, 4}, 5},
                               {{3, 4}, 1},
                               {{3, 5}, 2}});
  CHECK(proj_dim(k31) == 3);
  CHECK(regularity(k31) == 2);
  const auto ex = extremal_betti(k31);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0] == ExtremalEntry{3, 5, 2});

  CHECK_THROWS_AS(betti_numbers_closed_form(1, 2), Error);
  CHECK_THROWS_AS(betti_numbers_closed_form(0, 0), Error);
}

TEST_CASE("failed profiles are rejected with their evidence") {
  const auto ordered = paper_generator_order(initial_ideal(make_cycle(5)).gens);
  const auto prof = linear_quotients_profile(ordered);
  CHECK_THROWS_WITH_AS(betti_from_linear_quotients(prof), doctest::Contains("x1*y5"), Error);
}

TEST_CASE("complete intersection tables") {
  const BettiTable t = betti_complete_intersection({2, 2, 2});
  for (int i = 0; i <= 3; ++i) CHECK(t.at(i, 2 * i) == binomial_coefficient(3, i));
  CHECK(t.total() == 8);
  CHECK(proj_dim(t) == 3);
  CHECK(regularity(t) == 3);

  const BettiTable mixed = betti_complete_intersection({2, 2, 1, 3});
  CHECK(mixed.total() == 16);  // 2^c
  CHECK(proj_dim(mixed) == 4);
  CHECK(mixed.at(4, 8) == 1);  // top degree = sum of the degrees
  CHECK(mixed.at(0, 0) == 1);

  CHECK(betti_complete_intersection({5}).entries == Entries{{{0, 0}, 1}, {{1, 5}, 1}});
  CHECK_THROWS_AS(betti_complete_intersection({}), Error);
  CHECK_THROWS_AS(betti_complete_intersection({2, 0}), Error);
}

TEST_CASE("published reference values") {
  const PaperReference c6 = paper_reference_values_cycle(6);
  CHECK(c6.projdim == 6);
  CHECK(c6.reg == 4);
  CHECK(c6.corner == ExtremalEntry{6, 10, 9});

  const PaperReference c4 = paper_reference_values_cycle(4);
  CHECK(c4.corner == ExtremalEntry{4, 6, 2});

  const PaperReference k42 = paper_reference_values_kmn(4, 2);
  CHECK(k42.projdim == 8);
  CHECK(k42.reg == 2);
  CHECK(k42.corner == ExtremalEntry{8, 10, 1});

  const PaperReference k31 = paper_reference_values_kmn(3, 1);
  CHECK(k31.projdim == 3);
  CHECK(k31.corner == ExtremalEntry{3, 5, 2});

  CHECK_THROWS_AS(paper_reference_values_cycle(3), Error);
  CHECK_THROWS_AS(paper_reference_values_kmn(1, 1), Error);
  CHECK_THROWS_AS(paper_reference_values_kmn(1, 2), Error);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(5, 0) == 1);
  CHECK(binomial_coefficient(5, 6) == 0);
  CHECK(binomial_coefficient(5, -1) == 0);
  CHECK(binomial_coefficient(40, 20) == 137846528820LL);
}
