#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bei/monomial.hpp"

namespace bei {

struct FieldPrime {
  long long p = 32003;

  FieldPrime() = default;
  explicit FieldPrime(long long prime);
};

bool is_prime(long long p);

// Sparse integer matrix stored by columns; each column is a sorted list of
// (row, value) with nonzero signed values. rank_mod_p reduces the entries
// into the field it is given, rank_exact_rationals takes them as they are.
struct MatrixModP {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;

  static MatrixModP from_dense(const std::vector<std::vector<long long>>& dense);
};

long long rank_mod_p(const MatrixModP& m, const FieldPrime& field);

// Exact rank over the rationals via fraction-free elimination on 128-bit
// integers; refuses (throws) above the column cap or on overflow.
long long rank_exact_rationals(const MatrixModP& m, int column_cap = 600);

long long inverse_mod_p(long long a, long long p);

}  // namespace bei
