#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "bei/modp.hpp"

using namespace bei;

namespace {

MatrixModP dense(const std::vector<std::vector<long long>>& rows) {
  return MatrixModP::from_dense(rows);
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS_AS(FieldPrime(1), Error);
  CHECK_THROWS_AS(FieldPrime(32001), Error);
  CHECK(FieldPrime().p == 32003);
}

TEST_CASE("ranks of small matrices") {
  CHECK(rank_mod_p(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), FieldPrime(32003)) == 3);
  CHECK(rank_mod_p(dense({{0, 0}, {0, 0}}), FieldPrime(32003)) == 0);
  CHECK(rank_mod_p(dense({{1, 2}, {2, 4}}), FieldPrime(32003)) == 1);
  CHECK(rank_mod_p(dense({{1, 2}, {2, 4}}), FieldPrime(3)) == 1);
  // negative entries reduce into the field
  CHECK(rank_mod_p(dense({{-1, 1}, {1, -1}}), FieldPrime(5)) == 1);
  // rank can drop in small characteristic: det = 2
  const std::vector<std::vector<long long>> m{{1, 1}, {1, 3}};
  CHECK(rank_mod_p(dense(m), FieldPrime(2)) == 1);
  CHECK(rank_mod_p(dense(m), FieldPrime(3)) == 2);
}

TEST_CASE("mod-p rank agrees with exact rational rank on random sparse matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = size(rng), c = size(rng);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c, 0));
    for (auto& row : rows)
      for (auto& x : row)
        if (val(rng) == 0) x = val(rng);
    const MatrixModP m = dense(rows);
    CHECK(rank_mod_p(m, FieldPrime(32003)) == rank_exact_rationals(m));
  }
}

TEST_CASE("exact rank refuses wide matrices") {
  MatrixModP wide;
  wide.rows = 1;
  wide.cols = 601;
  wide.columns.assign(601, {});
  CHECK_THROWS_AS(rank_exact_rationals(wide), CapError);
  CHECK_THROWS_AS(rank_exact_rationals(wide, 600), CapError);
  CHECK(rank_exact_rationals(wide, 601) == 0);
}

TEST_CASE("modular inverses") {
  for (long long p : {2LL, 3LL, 32003LL})
    for (long long a = 1; a < std::min<long long>(p, 50); ++a)
      CHECK(inverse_mod_p(a, p) * a % p == 1);
  CHECK(inverse_mod_p(32002, 32003) == 32002);  // -1 is its own inverse
}
