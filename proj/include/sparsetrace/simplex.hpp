#pragma once

#include <cstddef>
#include <vector>

#include "sparsetrace/rational_matrix.hpp"

namespace sparsetrace {

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  std::vector<Rational> x;
  /// Basic column indices at the optimum, one per (non-redundant) row.
  std::vector<std::size_t> basis;
  Rational objective = 0;
  /// Some basic variable is zero.
  bool degenerate = false;
  /// Every nonbasic reduced cost is strictly positive.
  bool unique = false;
};

/// Minimizes c.x subject to A x = b, x >= 0 in exact arithmetic
/// (two-phase tableau simplex, Bland's rule).
LpResult solve_lp(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace sparsetrace
