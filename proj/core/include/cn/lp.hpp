#pragma once

// Exact linear programming over the rationals:
//   minimize c.x  subject to  A x = b,  x >= 0.
// Dense two-phase simplex with Bland's rule, so it always terminates.

#include <vector>

#include "cn/rational.hpp"

namespace cn::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Problem {
  std::vector<std::vector<Rational>> a;  // rows of A
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

Solution solve(const Problem& problem);

}  // namespace cn::lp
