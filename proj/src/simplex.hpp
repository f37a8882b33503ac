#pragma once

// Linear programs  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so that the
// slack basis is feasible. Solved in floating point first; the final basis is
// then re-solved and, if needed, pivoted to optimality in exact rationals.

#include <cstddef>
#include <utility>
#include <vector>

#include "ordia/exact.hpp"

namespace ordia::detail {

struct SparseLp {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;  // structural columns
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  std::vector<Rational> x;  // structural variables
  Rational objective;
  double float_objective = 0.0;
  std::size_t float_pivots = 0;
  std::size_t exact_pivots = 0;
  bool float_basis_optimal = false;
};

/// Throws std::runtime_error if the program is unbounded.
LpSolution solve_lp(const SparseLp& lp);

}  // namespace ordia::detail
