#pragma once

#include <array>
#include <string>
#include <vector>

#include "nil7/liealg.hpp"

namespace nil7 {

/// b_0..b_n of the Chevalley-Eilenberg complex.
struct BettiVector {
  std::vector<std::size_t> b;

  std::size_t total() const;
  long long euler() const;
  bool poincare_dual() const;
  friend bool operator==(const BettiVector& x, const BettiVector& y) { return x.b == y.b; }
};

std::string to_string(const BettiVector& v);

/// Matrix of d from degree k to degree k+1 in lexicographic monomial bases.
Matrix differential_matrix(const Presentation& p, int k);
/// Throws NotFlat.
BettiVector betti(const Presentation& p);

struct Table2Row {
  int row;
  std::string label;
  Presentation model;  // over Q, with the printed parameter values
  std::array<std::size_t, 3> b123;
  std::size_t printed_sum;
};
std::vector<Table2Row> table2_rows();

struct Table2Check {
  Table2Row expected;
  BettiVector computed;
  bool pass;  // b1, b2, b3 agree
};
std::vector<Table2Check> verify_table2();

}  // namespace nil7
